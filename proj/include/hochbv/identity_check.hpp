#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hochbv/hochschild.hpp"

// Exact per-word verification of the chain-level identities. Both sides of an
// identity are evaluated on every basis word (pair/triple of words for the
// bilinear/trilinear ones) of the truncation window and compared exactly; the
// first mismatch in enumeration order is reported as the counterexample.

namespace hochbv {

enum class IdentityName {
  I1,   // theta is a chain map
  I2,   // cocommutativity of theta up to h
  I3,   // h homotopic to the rotation-coproduct bucket via H
  I4,   // co-Leibniz up to G (plus the strict h form)
  I5,   // bullet chain map + associativity sign law
  I6,   // commutativity of bullet up to K
  I7,   // bracket = BV deviation up to H_bullet + K(1 (x) B)
  I8,   // strict Leibniz for the bracket
  I9,   // right-module compatibility up to H_frobR / G_frobR
  I10,  // left-module compatibility, strict
  R1,   // relative product star is a chain map
  R2,   // star associativity sign law
  R3,   // commutativity of star up to T
  R4,   // T homotopic to the boundary bucket of H_rel
  R5,   // Leibniz for the relative bracket (strict + homotopy form)
};

std::string identity_str(IdentityName id);
IdentityName parse_identity(const std::string& id);  // throws std::invalid_argument
std::vector<IdentityName> bv_identities();           // I1..I10
std::vector<IdentityName> relative_identities();     // R1..R5
std::vector<IdentityName> all_identities();

struct IdentityReport {
  std::string identity;
  std::string subject;
  int max_length = 0;
  std::optional<int> max_degree;
  std::string status;  // "pass" | "fail" | "needs-larger-window"
  std::optional<std::string> counterexample;
  long long tuples_checked = 0;

  bool pass() const { return status == "pass"; }
  nlohmann::ordered_json to_json() const;
};

IdentityReport check_identity(const FrobeniusAlgebra& A, IdentityName id,
                              const Truncation& t);

}  // namespace hochbv
