#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace clio {

using Pid = uint32_t;       // global process id
using Va = uint64_t;        // virtual address
using Vpn = uint64_t;       // virtual page number
using Ppn = uint64_t;       // physical page number
using RequestId = uint64_t;
using SimTime = uint64_t;   // simulated nanoseconds

constexpr uint64_t kKiB = 1024;
constexpr uint64_t kMiB = 1024 * kKiB;
constexpr uint64_t kGiB = 1024 * kMiB;

// Permission bits. No execute: the remote API is read/write/atomic only.
enum class Perm : uint8_t {
  none = 0,
  read = 1,
  write = 2,
  read_write = 3,
};

inline constexpr bool can_read(Perm p) {
  return (static_cast<uint8_t>(p) & static_cast<uint8_t>(Perm::read)) != 0;
}
inline constexpr bool can_write(Perm p) {
  return (static_cast<uint8_t>(p) & static_cast<uint8_t>(Perm::write)) != 0;
}

enum class Err : uint8_t {
  none = 0,
  invalid_argument,
  out_of_va,
  not_allocated,
  overflow,
  duplicate,
  out_of_memory,
  out_of_range,
  full,
  not_found,
  perm,
  bad_unlock,
  bad_op,
  timeout,
  corrupt,
};

const char* err_name(Err e);

template <typename T>
class Result {
 public:
  Result(T v) : val_(std::move(v)), err_(Err::none) {}
  Result(Err e) : err_(e) {}

  bool ok() const { return err_ == Err::none; }
  explicit operator bool() const { return ok(); }
  const T& value() const { return *val_; }
  T& value() { return *val_; }
  Err error() const { return err_; }

 private:
  std::optional<T> val_;
  Err err_;
};

template <>
class Result<void> {
 public:
  Result() : err_(Err::none) {}
  Result(Err e) : err_(e) {}
  bool ok() const { return err_ == Err::none; }
  explicit operator bool() const { return ok(); }
  Err error() const { return err_; }

 private:
  Err err_;
};

struct PidVpn {
  Pid pid;
  Vpn vpn;
  bool operator==(const PidVpn&) const = default;
};

struct PidVpnHash {
  size_t operator()(const PidVpn& k) const {
    uint64_t x = (static_cast<uint64_t>(k.pid) << 1) ^ k.vpn;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<size_t>(x);
  }
};

}  // namespace clio
