// parallel.hpp - deterministic reductions shared by the OpenMP kernels
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace rtf {

// Neumaier's variant of Kahan summation
template <class T>
struct Compensated {
    T sum{}, c{};
    void add(T x) {
        T t = sum + x;
        if constexpr (std::is_same_v<T, double>) {
            if (std::fabs(sum) >= std::fabs(x)) c += (sum - t) + x;
            else c += (x - t) + sum;
        } else {
            c += cadd(sum, x, t);
        }
        sum = t;
    }
    T value() const { return sum + c; }

private:
    static T cadd(T s, T x, T t) {
        auto part = [](double a, double b, double tt) {
            return std::fabs(a) >= std::fabs(b) ? (a - tt) + b : (b - tt) + a;
        };
        return T(part(s.real(), x.real(), t.real()), part(s.imag(), x.imag(), t.imag()));
    }
};

// Number of fixed blocks a range is cut into. Block boundaries depend only on
// the range length, never on the thread count, so the combined result is
// bit-identical for any OMP_NUM_THREADS.
inline constexpr std::int64_t kReduceBlocks = 256;

// sum_{i=lo}^{hi-1} f(i), blocked and compensated; parallel when use_omp
template <class T, class F>
T blocked_sum(std::int64_t lo, std::int64_t hi, F&& f, bool use_omp = true) {
    if (hi <= lo) return T{};
    std::int64_t n = hi - lo;
    std::int64_t nb = n < kReduceBlocks ? n : kReduceBlocks;
    std::vector<T> part(static_cast<std::size_t>(nb));
#pragma omp parallel for schedule(dynamic) if (use_omp)
    for (std::int64_t b = 0; b < nb; ++b) {
        std::int64_t s = lo + n * b / nb, e = lo + n * (b + 1) / nb;
        Compensated<T> acc;
        for (std::int64_t i = s; i < e; ++i) acc.add(f(i));
        part[static_cast<std::size_t>(b)] = acc.value();
    }
    Compensated<T> tot;
    for (auto& v : part) tot.add(v);
    return tot.value();
}

}  // namespace rtf
