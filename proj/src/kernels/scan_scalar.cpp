#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "srw/kernels.hpp"

namespace srw::kernels {

  std::string_view name(Backend b) noexcept {
    switch (b) {
      case Backend::scalar:
        return "scalar";
      case Backend::avx2:
        return "avx2";
    }
    return "unknown";
  }

  void CandidateTable::add_single(Letter x) {
    if (!single_[x]) {
      single_.set(x);
      singles_.push_back(x);
    }
  }

  void CandidateTable::add_pair(Letter x, Letter y) {
    std::size_t key = (static_cast<std::size_t>(x) << 8) | y;
    if (pair_[key]) {
      return;
    }
    pair_.set(key);
    auto it = std::find_if(pairs_.begin(), pairs_.end(), [x](auto const& p) {
      return p.first == x;
    });
    if (it == pairs_.end()) {
      pairs_.emplace_back(x, std::vector<Letter>{y});
    } else {
      it->second.push_back(y);
    }
  }

  std::size_t next_candidate_scalar(WordView              w,
                                    std::size_t           from,
                                    CandidateTable const& table) {
    std::size_t const n = w.size();
    for (std::size_t p = from; p < n; ++p) {
      if (table.is_single(w[p])) {
        return p;
      }
      if (p + 1 < n && table.is_pair(w[p], w[p + 1])) {
        return p;
      }
    }
    return n;
  }

  bool available(Backend b) noexcept {
    switch (b) {
      case Backend::scalar:
        return true;
      case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__)
        return avx2_compiled() && __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
  }

  Backend default_backend() noexcept {
    static Backend const chosen = [] {
      if (char const* env = std::getenv("SRW_KERNEL")) {
        std::string v(env);
        if (v == "scalar") {
          return Backend::scalar;
        }
        if (v == "avx2" && available(Backend::avx2)) {
          return Backend::avx2;
        }
      }
      return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
    }();
    return chosen;
  }

  ScanFn select(Backend b) {
    if (!available(b)) {
      throw std::invalid_argument(std::string("kernel backend not available: ")
                                  + std::string(name(b)));
    }
    switch (b) {
      case Backend::avx2:
        return &next_candidate_avx2;
      case Backend::scalar:
        break;
    }
    return &next_candidate_scalar;
  }

}  // namespace srw::kernels
