#include "sikta/kernels/edit_distance.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <vector>

#include "sikta/errors.hpp"

namespace sikta::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Impl detect_impl() {
    if (const char* env = std::getenv("SIKTA_EDIT_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Impl::kScalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (!cpu_has_avx2()) {
                throw ConfigError("SIKTA_EDIT_KERNEL=avx2 but CPU lacks AVX2");
            }
            return Impl::kAvx2;
        }
        throw ConfigError(std::string("unknown SIKTA_EDIT_KERNEL value: ") + env);
    }
    return cpu_has_avx2() ? Impl::kAvx2 : Impl::kScalar;
}

// The vector kernel only wins once the DP matrix has some volume.
constexpr size_t kSimdMinLen = 16;

} // namespace

bool impl_available(Impl impl) {
    switch (impl) {
        case Impl::kAvx2: return cpu_has_avx2();
        default: return true;
    }
}

Impl resolved_impl() {
    static const Impl impl = detect_impl();
    return impl;
}

const char* impl_name(Impl impl) {
    switch (impl) {
        case Impl::kAuto: return "auto";
        case Impl::kScalar: return "scalar";
        case Impl::kAvx2: return "avx2";
    }
    return "?";
}

uint32_t edit_distance_scalar(const uint32_t* a, size_t n, const uint32_t* b, size_t m) {
    if (n == 0) return static_cast<uint32_t>(m);
    if (m == 0) return static_cast<uint32_t>(n);

    // Keep the row we iterate over as the shorter sequence.
    if (m > n) {
        std::swap(a, b);
        std::swap(n, m);
    }

    std::vector<uint32_t> row(m + 1);
    std::iota(row.begin(), row.end(), 0u);
    for (size_t i = 1; i <= n; ++i) {
        uint32_t diag = row[0];
        row[0] = static_cast<uint32_t>(i);
        const uint32_t ai = a[i - 1];
        for (size_t j = 1; j <= m; ++j) {
            const uint32_t up = row[j];
            const uint32_t subst = diag + (ai != b[j - 1] ? 1u : 0u);
            const uint32_t best = std::min(subst, std::min(up, row[j - 1]) + 1u);
            row[j] = best;
            diag = up;
        }
    }
    return row[m];
}

uint32_t edit_distance(std::span<const uint32_t> a, std::span<const uint32_t> b, Impl impl) {
    const uint32_t* pa = a.data();
    const uint32_t* pb = b.data();
    size_t n = a.size();
    size_t m = b.size();

    // Common affixes never change the distance; stripping them shrinks the
    // DP for the typical near-match inputs this pipeline scores.
    while (n > 0 && m > 0 && *pa == *pb) {
        ++pa, ++pb, --n, --m;
    }
    while (n > 0 && m > 0 && pa[n - 1] == pb[m - 1]) {
        --n, --m;
    }
    if (n == 0) return static_cast<uint32_t>(m);
    if (m == 0) return static_cast<uint32_t>(n);

    Impl chosen = impl;
    if (chosen == Impl::kAuto) {
        chosen = resolved_impl();
        if (chosen == Impl::kAvx2 && std::min(n, m) < kSimdMinLen) {
            chosen = Impl::kScalar;
        }
    }
    if (chosen == Impl::kAvx2) {
        return edit_distance_avx2(pa, n, pb, m);
    }
    return edit_distance_scalar(pa, n, pb, m);
}

} // namespace sikta::kernels
