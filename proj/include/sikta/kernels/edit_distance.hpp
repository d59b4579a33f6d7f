#pragma once

#include <cstdint>
#include <span>
#include <string>

// Levenshtein distance over 32-bit token ids (Unicode code points for
// character-level metrics, interned word ids for word-level ones).
//
// A scalar two-row dynamic program is the reference kernel. An AVX2
// variant sweeps anti-diagonals eight cells at a time; it is selected at
// runtime when the CPU supports it and the inputs are large enough to pay
// for the setup. Both kernels are equivalence-tested against each other
// and against a brute-force oracle.

namespace sikta::kernels {

enum class Impl {
    kAuto,   // runtime choice: AVX2 when supported and worthwhile
    kScalar,
    kAvx2,
};

// Minimal insert+delete+substitute count between the two sequences.
uint32_t edit_distance(std::span<const uint32_t> a,
                       std::span<const uint32_t> b,
                       Impl impl = Impl::kAuto);

// True when `impl` can run on this machine.
bool impl_available(Impl impl);

// The implementation kAuto resolves to for large inputs. Honors the
// SIKTA_EDIT_KERNEL environment variable ("scalar" or "avx2").
Impl resolved_impl();

const char* impl_name(Impl impl);

// Internal entry points, exposed for the equivalence tests.
uint32_t edit_distance_scalar(const uint32_t* a, size_t n, const uint32_t* b, size_t m);
uint32_t edit_distance_avx2(const uint32_t* a, size_t n, const uint32_t* b, size_t m);

} // namespace sikta::kernels
