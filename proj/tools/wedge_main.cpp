#include <cstdio>
int main() { std::puts("wedge: placeholder"); return 0; }
