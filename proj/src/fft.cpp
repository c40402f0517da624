#include "fft.hpp"

#include <fftw3.h>

#include <cstdlib>
#include <map>
#include <mutex>
#include <vector>

namespace umcf {

namespace {

int g_threads = 0;  // 0 = not initialized yet
std::mutex g_mutex;

int env_threads() {
  const char* s = std::getenv("UMCF_THREADS");
  if (!s) return 1;
  const int n = std::atoi(s);
  return n >= 1 ? n : 1;
}

struct PlanEntry {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  fftw_complex* buf_in = nullptr;
  fftw_complex* buf_out = nullptr;
  std::size_t size = 0;

  ~PlanEntry() {
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
    if (buf_in) fftw_free(buf_in);
    if (buf_out) fftw_free(buf_out);
  }
};

// keyed by shape; wiped when the thread count changes
std::map<std::vector<int>, std::unique_ptr<PlanEntry>>& plan_cache() {
  static std::map<std::vector<int>, std::unique_ptr<PlanEntry>> cache;
  return cache;
}

void ensure_threads_locked() {
  if (g_threads == 0) {
    fftw_init_threads();
    g_threads = env_threads();
  }
}

PlanEntry& entry_for_locked(const Grid& g) {
  ensure_threads_locked();
  auto& cache = plan_cache();
  auto it = cache.find(g.n());
  if (it != cache.end()) return *it->second;

  auto e = std::make_unique<PlanEntry>();
  e->size = g.size();
  e->buf_in = fftw_alloc_complex(e->size);
  e->buf_out = fftw_alloc_complex(e->size);
  if (!e->buf_in || !e->buf_out) fail(ErrorCode::internal, "fftw_alloc failed");
  fftw_plan_with_nthreads(g_threads);
  // FFTW_ESTIMATE keeps planning deterministic and cheap.
  e->fwd = fftw_plan_dft(g.dim(), g.n().data(), e->buf_in, e->buf_out,
                         FFTW_FORWARD, FFTW_ESTIMATE);
  e->bwd = fftw_plan_dft(g.dim(), g.n().data(), e->buf_in, e->buf_out,
                         FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!e->fwd || !e->bwd) fail(ErrorCode::internal, "fftw planning failed");
  auto [pos, ok] = cache.emplace(g.n(), std::move(e));
  return *pos->second;
}

}  // namespace

void set_fft_threads(int n) {
  std::lock_guard lock(g_mutex);
  if (n < 1) n = 1;
  ensure_threads_locked();
  if (n != g_threads) {
    plan_cache().clear();
    g_threads = n;
  }
}

int fft_threads() {
  std::lock_guard lock(g_mutex);
  ensure_threads_locked();
  return g_threads;
}

namespace detail {

void fft_execute(const Grid& g, const std::complex<double>* in,
                 std::complex<double>* out, bool forward) {
  std::lock_guard lock(g_mutex);
  PlanEntry& e = entry_for_locked(g);
  auto* bi = reinterpret_cast<std::complex<double>*>(e.buf_in);
  auto* bo = reinterpret_cast<std::complex<double>*>(e.buf_out);
  std::copy(in, in + e.size, bi);
  fftw_execute(forward ? e.fwd : e.bwd);
  std::copy(bo, bo + e.size, out);
}

}  // namespace detail
}  // namespace umcf
