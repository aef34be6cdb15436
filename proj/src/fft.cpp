#include "hdisk/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace hdisk::fft {

namespace {

// FFTW planning and plan destruction touch global planner state.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  Plan(int n, fftw_complex* in, fftw_complex* out, int sign) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw std::runtime_error("fftw: plan creation failed");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

}  // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in, Direction dir) {
  const int n = static_cast<int>(in.size());
  std::vector<std::complex<double>> buf_in(in.begin(), in.end());
  std::vector<std::complex<double>> out(in.size());
  if (n == 0) return out;
  // std::complex<double> is layout-compatible with fftw_complex.
  Plan plan(n, reinterpret_cast<fftw_complex*>(buf_in.data()),
            reinterpret_cast<fftw_complex*>(out.data()),
            dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD);
  plan.execute();
  return out;
}

std::vector<double> circular_convolve(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("circular_convolve: length mismatch");
  const std::size_t n = a.size();
  // Pack both real inputs into one complex transform: z = a + i b.
  std::vector<std::complex<double>> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = {a[k], b[k]};
  const auto zf = dft(z, Direction::Forward);
  std::vector<std::complex<double>> prod(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto zc = std::conj(zf[(n - k) % n]);
    const auto af = 0.5 * (zf[k] + zc);
    const auto bf = std::complex<double>(0.0, -0.5) * (zf[k] - zc);
    prod[k] = af * bf;
  }
  const auto back = dft(prod, Direction::Backward);
  std::vector<double> out(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = back[k].real() * inv_n;
  return out;
}

}  // namespace hdisk::fft
