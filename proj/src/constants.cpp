#include "rigcert/constants.hpp"

#include <map>
#include <mutex>

namespace rigcert {
namespace {

template <class Compute>
Interval memoized(std::map<Precision, Interval>& cache, std::mutex& mutex, Precision bits, Compute compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(bits); it != cache.end()) return it->second;
  }
  BigFloat lo(bits);
  BigFloat hi(bits);
  compute(lo.get(), MPFR_RNDD);
  compute(hi.get(), MPFR_RNDU);
  Interval value = Interval::from_bounds(lo, hi);
  std::lock_guard lock(mutex);
  return cache.try_emplace(bits, std::move(value)).first->second;
}

}  // namespace

Interval pi(Precision bits) {
  static std::map<Precision, Interval> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, bits, [](mpfr_ptr out, mpfr_rnd_t rnd) { mpfr_const_pi(out, rnd); });
}

Interval euler(Precision bits) {
  static std::map<Precision, Interval> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, bits, [](mpfr_ptr out, mpfr_rnd_t rnd) {
    mpfr_set_ui(out, 1, MPFR_RNDN);
    mpfr_exp(out, out, rnd);
  });
}

}  // namespace rigcert
