#include <cstdio>

int main() {
    std::puts("nilpair (placeholder)");
    return 0;
}
