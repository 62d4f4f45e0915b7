// acceptance placeholder
#include <cstdio>
int main(){ puts("acceptance placeholder"); return 1; }
