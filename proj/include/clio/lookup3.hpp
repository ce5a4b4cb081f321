#pragma once

#include <cstddef>
#include <cstdint>

#include "clio/common.hpp"

namespace clio {

// Bob Jenkins' lookup3 (hashlittle). Byte-order independent of the host:
// words are assembled little-endian from the input bytes.
uint32_t lookup3(const void* key, size_t length, uint32_t initval);

// hashlittle2: two 32-bit results for the price of one pass.
void lookup3_pair(const void* key, size_t length, uint32_t* pc, uint32_t* pb);

// 64-bit convenience: primary word in the high half.
uint64_t lookup3_64(const void* key, size_t length, uint64_t initval = 0);

// Page-table bucket index: lookup3 over the concatenated little-endian
// (pid, vpn) bytes, reduced modulo num_buckets.
size_t hash_index(Pid pid, Vpn vpn, size_t num_buckets);

}  // namespace clio
