#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace hochbv::detail {

// Hard cap on tensor length. Words are flat PODs so chains sort with memcmp;
// the byte layout (len, head, slots...) makes that order length-lexicographic.
inline constexpr int kMaxSlots = 24;

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Word {
  uint8_t len = 0;
  uint8_t head = 0;
  std::array<uint8_t, kMaxSlots> s{};

  uint8_t slot(int i) const { return s[static_cast<size_t>(i)]; }
};

static_assert(sizeof(Word) == 2 + kMaxSlots, "Word must stay padding-free");

inline bool operator==(const Word& a, const Word& b) {
  return std::memcmp(&a, &b, sizeof(Word)) == 0;
}
inline bool operator!=(const Word& a, const Word& b) { return !(a == b); }
inline bool operator<(const Word& a, const Word& b) {
  return std::memcmp(&a, &b, sizeof(Word)) < 0;
}

inline Word make_word(uint8_t head) {
  Word w;
  w.head = head;
  return w;
}

inline void append_slot(Word& w, uint8_t a) {
  if (w.len >= kMaxSlots) throw TruncationError("word length exceeds engine cap");
  w.s[w.len++] = a;
}

// Tensor factors of chains living in C ⊗ C and C ⊗ C ⊗ C.
struct Word2 {
  Word a, b;
};
struct Word3 {
  Word a, b, c;
};

inline bool operator==(const Word2& x, const Word2& y) {
  return std::memcmp(&x, &y, sizeof(Word2)) == 0;
}
inline bool operator<(const Word2& x, const Word2& y) {
  return std::memcmp(&x, &y, sizeof(Word2)) < 0;
}
inline bool operator==(const Word3& x, const Word3& y) {
  return std::memcmp(&x, &y, sizeof(Word3)) == 0;
}
inline bool operator<(const Word3& x, const Word3& y) {
  return std::memcmp(&x, &y, sizeof(Word3)) < 0;
}

static_assert(sizeof(Word2) == 2 * sizeof(Word));
static_assert(sizeof(Word3) == 3 * sizeof(Word));

}  // namespace hochbv::detail
