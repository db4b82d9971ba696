#ifndef SCLDPC_FFT_HPP
#define SCLDPC_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace scldpc {

// Iterative radix-2 FFT with precomputed twiddles, fixed size per instance.
class Fft {
  public:
    explicit Fft(std::size_t n) : n_(n) {
        rev_.resize(n);
        std::size_t log2n = 0;
        while ((std::size_t{1} << log2n) < n) ++log2n;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < log2n; ++b)
                if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
            rev_[i] = r;
        }
        twiddle_.resize(n / 2);
        const double base = -2.0 * 3.14159265358979323846 / static_cast<double>(n);
        for (std::size_t k = 0; k < n / 2; ++k)
            twiddle_[k] = std::polar(1.0, base * static_cast<double>(k));
    }

    std::size_t size() const { return n_; }

    void forward(std::complex<double>* a) const { transform(a, false); }

    void inverse(std::complex<double>* a) const {
        transform(a, true);
        const double s = 1.0 / static_cast<double>(n_);
        for (std::size_t i = 0; i < n_; ++i) a[i] *= s;
    }

    static std::size_t next_pow2(std::size_t v) {
        std::size_t n = 1;
        while (n < v) n <<= 1;
        return n;
    }

  private:
    void transform(std::complex<double>* a, bool inv) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (i < rev_[i]) std::swap(a[i], a[rev_[i]]);
        for (std::size_t len = 2; len <= n_; len <<= 1) {
            const std::size_t stride = n_ / len;
            for (std::size_t i = 0; i < n_; i += len) {
                for (std::size_t k = 0; k < len / 2; ++k) {
                    std::complex<double> w = twiddle_[k * stride];
                    if (inv) w = std::conj(w);
                    const std::complex<double> u = a[i + k];
                    const std::complex<double> t = a[i + k + len / 2] * w;
                    a[i + k] = u + t;
                    a[i + k + len / 2] = u - t;
                }
            }
        }
    }

    std::size_t n_;
    std::vector<std::size_t> rev_;
    std::vector<std::complex<double>> twiddle_;
};

} // namespace scldpc

#endif
