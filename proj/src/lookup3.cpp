#include "clio/lookup3.hpp"

#include <cassert>
#include <cstring>

namespace clio {

namespace {

inline uint32_t rot(uint32_t x, int k) { return (x << k) | (x >> (32 - k)); }

inline void mix(uint32_t& a, uint32_t& b, uint32_t& c) {
  a -= c; a ^= rot(c, 4);  c += b;
  b -= a; b ^= rot(a, 6);  a += c;
  c -= b; c ^= rot(b, 8);  b += a;
  a -= c; a ^= rot(c, 16); c += b;
  b -= a; b ^= rot(a, 19); a += c;
  c -= b; c ^= rot(b, 4);  b += a;
}

inline void final_mix(uint32_t& a, uint32_t& b, uint32_t& c) {
  c ^= b; c -= rot(b, 14);
  a ^= c; a -= rot(c, 11);
  b ^= a; b -= rot(a, 25);
  c ^= b; c -= rot(b, 16);
  a ^= c; a -= rot(c, 4);
  b ^= a; b -= rot(a, 14);
  c ^= b; c -= rot(b, 24);
}

inline uint32_t word_le(const uint8_t* p, size_t n) {
  uint32_t w = 0;
  for (size_t i = 0; i < n; ++i) w |= static_cast<uint32_t>(p[i]) << (8 * i);
  return w;
}

void hash_core(const void* key, size_t length, uint32_t* pc, uint32_t* pb) {
  uint32_t a, b, c;
  a = b = c = 0xdeadbeef + static_cast<uint32_t>(length) + *pc;
  c += *pb;

  const uint8_t* k = static_cast<const uint8_t*>(key);
  while (length > 12) {
    a += word_le(k, 4);
    b += word_le(k + 4, 4);
    c += word_le(k + 8, 4);
    mix(a, b, c);
    length -= 12;
    k += 12;
  }

  if (length > 0) {
    if (length > 8) {
      a += word_le(k, 4);
      b += word_le(k + 4, 4);
      c += word_le(k + 8, length - 8);
    } else if (length > 4) {
      a += word_le(k, 4);
      b += word_le(k + 4, length - 4);
    } else {
      a += word_le(k, length);
    }
    final_mix(a, b, c);
  }
  // zero-length input skips final_mix, per the reference implementation

  *pc = c;
  *pb = b;
}

}  // namespace

uint32_t lookup3(const void* key, size_t length, uint32_t initval) {
  uint32_t pc = initval, pb = 0;
  hash_core(key, length, &pc, &pb);
  return pc;
}

void lookup3_pair(const void* key, size_t length, uint32_t* pc, uint32_t* pb) {
  hash_core(key, length, pc, pb);
}

uint64_t lookup3_64(const void* key, size_t length, uint64_t initval) {
  uint32_t pc = static_cast<uint32_t>(initval >> 32);
  uint32_t pb = static_cast<uint32_t>(initval);
  hash_core(key, length, &pc, &pb);
  return (static_cast<uint64_t>(pc) << 32) | pb;
}

size_t hash_index(Pid pid, Vpn vpn, size_t num_buckets) {
  assert(num_buckets >= 1);
  uint8_t buf[12];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<uint8_t>(pid >> (8 * i));
  for (int i = 0; i < 8; ++i) buf[4 + i] = static_cast<uint8_t>(vpn >> (8 * i));
  return static_cast<size_t>(lookup3_64(buf, sizeof(buf)) % num_buckets);
}

}  // namespace clio
