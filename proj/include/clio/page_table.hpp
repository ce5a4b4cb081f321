#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "clio/common.hpp"

namespace clio {

struct PageTableEntry {
  Pid pid = 0;
  Vpn vpn = 0;
  Ppn ppn = 0;
  Perm perms = Perm::none;
  bool valid = false;    // physical page assigned
  bool present = false;  // slot occupied
};

// Single flat hash table holding the PTEs of every process. The bucket
// count is fixed at construction; every lookup or insert touches exactly
// one bucket, so translation cost is bounded by one bucket fetch.
class HashPageTable {
 public:
  // Explicit slot layout, 32 bytes: pid(4) vpn(8) ppn(8) perms(1)
  // valid(1) present(1) pad(9). Used for footprint accounting only.
  static constexpr size_t kSlotBytes = 32;

  HashPageTable(size_t num_buckets, size_t slots_per_bucket);

  // Sizing rule: enough slots to cover every physical page, scaled by
  // the overprovision factor, rounded up to whole buckets.
  static size_t buckets_for(uint64_t physical_bytes, uint64_t page_size,
                            size_t slots_per_bucket, double overprovision);

  enum class InsertResult { ok, overflow, duplicate };

  // Counts one bucket fetch.
  std::optional<PageTableEntry> lookup(Pid pid, Vpn vpn);

  InsertResult insert(const PageTableEntry& entry);
  bool remove(Pid pid, Vpn vpn);

  // Fault path: flips an existing present entry to valid with the given
  // physical page. Returns false if no present entry matches.
  bool set_valid(Pid pid, Vpn vpn, Ppn ppn);

  size_t num_buckets() const { return num_buckets_; }
  size_t slots_per_bucket() const { return slots_per_bucket_; }
  uint64_t bucket_fetch_count() const { return bucket_fetches_; }
  size_t present_in_bucket(size_t bucket) const;
  size_t present_count() const { return present_count_; }
  uint64_t footprint_bytes() const {
    return static_cast<uint64_t>(num_buckets_) * slots_per_bucket_ * kSlotBytes;
  }

  // One slot per line: bucket,slot,pid,vpn,ppn,perms,valid
  void dump(std::ostream& os) const;

  // Full-scan check used by small-table tests: at most one present entry
  // per (pid, vpn), each in its hashed bucket.
  bool scan_consistent() const;

 private:
  size_t bucket_of(Pid pid, Vpn vpn) const;

  size_t num_buckets_;
  size_t slots_per_bucket_;
  std::vector<PageTableEntry> slots_;  // dense: bucket * K + slot
  uint64_t bucket_fetches_ = 0;
  size_t present_count_ = 0;
};

// Fixed-capacity translation cache with LRU replacement.
class Tlb {
 public:
  explicit Tlb(size_t capacity);

  struct Entry {
    Ppn ppn;
    Perm perms;
  };

  // Hit refreshes recency.
  std::optional<Entry> access(Pid pid, Vpn vpn);
  void fill(Pid pid, Vpn vpn, Ppn ppn, Perm perms);
  void invalidate(Pid pid, Vpn vpn);
  void clear();

  size_t size() const { return map_.size(); }
  size_t capacity() const { return capacity_; }

 private:
  struct Node {
    PidVpn key;
    Entry entry;
  };

  size_t capacity_;
  std::list<Node> lru_;  // front = most recent
  std::unordered_map<PidVpn, std::list<Node>::iterator, PidVpnHash> map_;
};

}  // namespace clio
