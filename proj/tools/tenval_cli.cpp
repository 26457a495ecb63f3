#include <cstdio>
int main() { std::puts("tenval: not yet wired"); return 0; }
