#pragma once

#include <complex>
#include <span>
#include <vector>

namespace heckelab {

// Neumaier-compensated accumulator, one compensation term per component.
class CompensatedComplex {
public:
    void add(std::complex<double> x) {
        add_part(re_, cre_, x.real());
        add_part(im_, cim_, x.imag());
    }
    std::complex<double> value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_part(double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

// Left-to-right pairwise tree: adjacent pairs are combined until one value
// remains. The tree shape depends only on the element count, so the result
// is independent of how the inputs were produced.
inline std::complex<double> pairwise_reduce(std::span<const std::complex<double>> v) {
    if (v.empty()) return {0.0, 0.0};
    std::vector<std::complex<double>> cur(v.begin(), v.end());
    while (cur.size() > 1) {
        std::vector<std::complex<double>> next;
        next.reserve((cur.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < cur.size(); i += 2) next.push_back(cur[i] + cur[i + 1]);
        if (cur.size() % 2 == 1) next.push_back(cur.back());
        cur.swap(next);
    }
    return cur[0];
}

// Chunk size of the deterministic reduction used by every block sum.
inline constexpr std::uint64_t kSumChunk = 1u << 16;

}  // namespace heckelab
