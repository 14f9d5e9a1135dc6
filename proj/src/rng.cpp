#include "newsrec/rng.h"

namespace newsrec
{

std::uint64_t Rng::below(std::uint64_t n)
{
    // rejection on the top of the range keeps the draw unbiased
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t rep)
{
    return mix64(mix64(mix64(master) ^ cell) ^ (rep * 0x9e3779b97f4a7c15ULL + 1));
}

} // namespace newsrec
