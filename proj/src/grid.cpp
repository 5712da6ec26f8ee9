#include "sqg/grid.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "fft_plan.hpp"
#include "sqg/error.hpp"

namespace sqg {

namespace detail {

namespace {
// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t bytes) : ptr(fftw_malloc(bytes)) {}
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* ptr;
};
}  // namespace

FftPlan::FftPlan(int n) : n_(n) {
  const std::size_t real_size = static_cast<std::size_t>(n) * n;
  const std::size_t spec_size = static_cast<std::size_t>(n) * (n / 2 + 1);
  FftwBuffer real(real_size * sizeof(double));
  FftwBuffer spec(spec_size * sizeof(fftw_complex));
  std::lock_guard lock(planner_mutex());
  forward_ = fftw_plan_dft_r2c_2d(n, n, static_cast<double*>(real.ptr),
                                  static_cast<fftw_complex*>(spec.ptr), FFTW_ESTIMATE);
  inverse_ = fftw_plan_dft_c2r_2d(n, n, static_cast<fftw_complex*>(spec.ptr),
                                  static_cast<double*>(real.ptr), FFTW_ESTIMATE);
}

FftPlan::~FftPlan() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(forward_);
  fftw_destroy_plan(inverse_);
}

void FftPlan::forward(const double* in, Complex* out) const {
  const std::size_t real_size = static_cast<std::size_t>(n_) * n_;
  const std::size_t spec_size = static_cast<std::size_t>(n_) * (n_ / 2 + 1);
  FftwBuffer real(real_size * sizeof(double));
  FftwBuffer spec(spec_size * sizeof(fftw_complex));
  std::memcpy(real.ptr, in, real_size * sizeof(double));
  fftw_execute_dft_r2c(forward_, static_cast<double*>(real.ptr),
                       static_cast<fftw_complex*>(spec.ptr));
  std::memcpy(static_cast<void*>(out), spec.ptr, spec_size * sizeof(fftw_complex));
}

void FftPlan::inverse(const Complex* in, double* out) const {
  const std::size_t real_size = static_cast<std::size_t>(n_) * n_;
  const std::size_t spec_size = static_cast<std::size_t>(n_) * (n_ / 2 + 1);
  FftwBuffer real(real_size * sizeof(double));
  FftwBuffer spec(spec_size * sizeof(fftw_complex));
  std::memcpy(spec.ptr, static_cast<const void*>(in), spec_size * sizeof(fftw_complex));
  fftw_execute_dft_c2r(inverse_, static_cast<fftw_complex*>(spec.ptr),
                       static_cast<double*>(real.ptr));
  std::memcpy(out, real.ptr, real_size * sizeof(double));
}

}  // namespace detail

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::shared_ptr<const detail::FftPlan> shared_plan(int n) {
  static std::mutex cache_mutex;
  static std::map<int, std::weak_ptr<const detail::FftPlan>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[n];
  if (auto plan = slot.lock()) return plan;
  auto plan = std::make_shared<const detail::FftPlan>(n);
  slot = plan;
  return plan;
}
}  // namespace

Grid2D::Grid2D(int n_points, double box_side) : n_(n_points), side_(box_side) {
  if (n_points < 8 || !is_power_of_two(n_points)) {
    throw ConfigError("grid size must be a power of two >= 8, got " + std::to_string(n_points));
  }
  if (!(box_side > 0.0) || !std::isfinite(box_side)) {
    throw ConfigError("box side must be positive and finite");
  }
  wavenumbers_.resize(n_);
  const double base = 2.0 * std::numbers::pi / side_;
  for (int i = 0; i < n_; ++i) wavenumbers_[i] = base * mode(i);
  plan_ = shared_plan(n_);
}

Grid2D make_grid(int n_points, double box_side) { return Grid2D(n_points, box_side); }

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what) {
  if (a != b) {
    throw ShapeError(std::string(what) + ": operands live on different grids (" +
                     std::to_string(a.n_points()) + " vs " + std::to_string(b.n_points()) + ")");
  }
}

}  // namespace sqg
