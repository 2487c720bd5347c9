// Compiled with -mavx2; only reached through kernels::select after a CPUID
// check.

#include <cstring>

#include "srw/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace srw::kernels {

#if defined(__AVX2__)

  bool avx2_compiled() noexcept {
    return true;
  }

  namespace {
    constexpr std::size_t kLanes = 32;
    // Not a valid letter index, so padding never matches.
    constexpr Letter kPad = 0xFF;

    inline std::uint32_t block_mask(__m256i v0,
                                    __m256i v1,
                                    CandidateTable const& table) {
      __m256i acc = _mm256_setzero_si256();
      for (Letter x : table.singles()) {
        acc = _mm256_or_si256(
            acc, _mm256_cmpeq_epi8(v0, _mm256_set1_epi8(static_cast<char>(x))));
      }
      for (auto const& [x, seconds] : table.pairs_by_first()) {
        __m256i first
            = _mm256_cmpeq_epi8(v0, _mm256_set1_epi8(static_cast<char>(x)));
        if (_mm256_testz_si256(first, first)) {
          continue;
        }
        __m256i second = _mm256_setzero_si256();
        for (Letter y : seconds) {
          second = _mm256_or_si256(
              second,
              _mm256_cmpeq_epi8(v1, _mm256_set1_epi8(static_cast<char>(y))));
        }
        acc = _mm256_or_si256(acc, _mm256_and_si256(first, second));
      }
      return static_cast<std::uint32_t>(_mm256_movemask_epi8(acc));
    }
  }  // namespace

  std::size_t next_candidate_avx2(WordView              w,
                                  std::size_t           from,
                                  CandidateTable const& table) {
    std::size_t const n    = w.size();
    Letter const*     data = w.data();
    std::size_t       b    = from;
    for (; b + kLanes + 1 <= n; b += kLanes) {
      __m256i v0 = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(data + b));
      __m256i v1
          = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(data + b + 1));
      std::uint32_t m = block_mask(v0, v1, table);
      if (m != 0) {
        return b + static_cast<std::size_t>(__builtin_ctz(m));
      }
    }
    if (b >= n) {
      return n;
    }
    alignas(32) Letter buf[2 * kLanes];
    std::memset(buf, kPad, sizeof(buf));
    std::memcpy(buf, data + b, n - b);
    __m256i v0 = _mm256_load_si256(reinterpret_cast<__m256i const*>(buf));
    __m256i v1 = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(buf + 1));
    std::uint32_t m = block_mask(v0, v1, table);
    if (m != 0) {
      return b + static_cast<std::size_t>(__builtin_ctz(m));
    }
    return n;
  }

#else

  bool avx2_compiled() noexcept {
    return false;
  }

  std::size_t next_candidate_avx2(WordView              w,
                                  std::size_t           from,
                                  CandidateTable const& table) {
    return next_candidate_scalar(w, from, table);
  }

#endif

}  // namespace srw::kernels
