#include "sikta/kernels/edit_distance.hpp"

#include <algorithm>
#include <vector>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SIKTA_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#endif

namespace sikta::kernels {

#if SIKTA_HAVE_AVX2_BUILD

// Anti-diagonal sweep of the Levenshtein DP. Cells on diagonal k (i+j==k)
// depend only on diagonals k-1 and k-2, so eight cells are computed per
// step with epi32 lanes:
//
//   cur[i] = min(min(prev[i-1], prev[i]) + 1, prev2[i-1] + (a[i-1]!=b[k-i-1]))
//
// b is stored reversed so that the lane loads of both sequences are
// contiguous and ascending. Lanes past the diagonal's valid range are
// dropped by a masked store; their operands read padded memory whose
// values never reach a kept lane.
__attribute__((target("avx2")))
uint32_t edit_distance_avx2(const uint32_t* a, size_t n, const uint32_t* b, size_t m) {
    if (n == 0) return static_cast<uint32_t>(m);
    if (m == 0) return static_cast<uint32_t>(n);

    constexpr int32_t kSentinel = 0x3FFFFFFF;
    std::vector<int32_t> buf0(n + 9, kSentinel);
    std::vector<int32_t> buf1(n + 9, kSentinel);
    std::vector<int32_t> buf2(n + 9, kSentinel);
    int32_t* prev2 = buf0.data(); // diagonal k-2
    int32_t* prev = buf1.data();  // diagonal k-1
    int32_t* cur = buf2.data();   // diagonal k

    std::vector<uint32_t> apad(n + 8, 0);
    std::copy(a, a + n, apad.begin());
    std::vector<uint32_t> brev(m + 8, 0);
    for (size_t j = 0; j < m; ++j) brev[j] = b[m - 1 - j];

    prev2[0] = 0;           // D[0][0]
    prev[0] = 1;            // D[0][1]
    prev[1] = 1;            // D[1][0]

    const __m256i one = _mm256_set1_epi32(1);
    const __m256i lane_idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

    for (size_t k = 2; k <= n + m; ++k) {
        if (k <= m) cur[0] = static_cast<int32_t>(k);
        if (k <= n) cur[k] = static_cast<int32_t>(k);

        const size_t ilo = std::max<size_t>(1, k > m ? k - m : 1);
        const size_t ihi = std::min(n, k - 1);
        const __m256i vlimit = _mm256_set1_epi32(static_cast<int32_t>(ihi) + 1);

        for (size_t i = ilo; i <= ihi; i += 8) {
            const __m256i va = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(apad.data() + i - 1));
            const __m256i vb = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(brev.data() + (m - k + i)));
            const __m256i eq = _mm256_cmpeq_epi32(va, vb);
            const __m256i cost = _mm256_andnot_si256(eq, one);

            const __m256i subst = _mm256_add_epi32(
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev2 + i - 1)), cost);
            const __m256i del = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(prev + i - 1));
            const __m256i ins = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(prev + i));
            const __m256i step = _mm256_add_epi32(_mm256_min_epi32(del, ins), one);
            const __m256i best = _mm256_min_epi32(subst, step);

            const __m256i pos = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int32_t>(i)), lane_idx);
            const __m256i keep = _mm256_cmpgt_epi32(vlimit, pos);
            _mm256_maskstore_epi32(cur + i, keep, best);
        }

        int32_t* recycled = prev2;
        prev2 = prev;
        prev = cur;
        cur = recycled;
    }
    return static_cast<uint32_t>(prev[n]);
}

#else

uint32_t edit_distance_avx2(const uint32_t* a, size_t n, const uint32_t* b, size_t m) {
    return edit_distance_scalar(a, n, b, m);
}

#endif

} // namespace sikta::kernels
