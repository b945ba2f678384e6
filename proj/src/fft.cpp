#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace spinwire::detail {

namespace {

// FFTW's planner is not thread-safe; plans are cached per (N, direction)
// and created under a lock. FFTW_UNALIGNED lets one plan execute on any
// caller buffer.
class PlanCache {
public:
    fftw_plan get(int n, int sign) {
        std::scoped_lock lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<fftw_complex> scratch_in(n), scratch_out(n);
        fftw_plan plan = fftw_plan_dft_1d(n, scratch_in.data(), scratch_out.data(),
                                          sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan) throw std::runtime_error("fftw_plan_dft_1d failed");
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

}  // namespace

void unitary_dft(const std::complex<double>* in, std::complex<double>* out,
                 int n, bool forward) {
    if (n <= 0) throw std::invalid_argument("unitary_dft: n must be positive");
    const int sign = forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = cache().get(n, sign);
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) out[i] *= scale;
}

}  // namespace spinwire::detail
