#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "rvic/types.hpp"

namespace rvic {

// Little-endian byte buffer with length-checked reads. Doubles are copied
// bit-for-bit, so values round-trip exactly.
class BinaryWriter {
 public:
  void write_u32(std::uint32_t v) { write_raw(&v, sizeof(v)); }
  void write_u64(std::uint64_t v) { write_raw(&v, sizeof(v)); }
  void write_i64(std::int64_t v) { write_raw(&v, sizeof(v)); }
  void write_f64(double v) { write_raw(&v, sizeof(v)); }
  void write_string(const std::string& s) {
    write_u64(s.size());
    write_raw(s.data(), s.size());
  }
  void write_f64_vector(const std::vector<double>& v) {
    write_u64(v.size());
    write_raw(v.data(), v.size() * sizeof(double));
  }

  const std::vector<unsigned char>& bytes() const { return bytes_; }

 private:
  void write_raw(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    bytes_.insert(bytes_.end(), p, p + n);
  }
  std::vector<unsigned char> bytes_;
};

class BinaryReader {
 public:
  explicit BinaryReader(std::vector<unsigned char> bytes)
      : bytes_(std::move(bytes)) {}

  std::uint32_t read_u32() { return read_pod<std::uint32_t>(); }
  std::uint64_t read_u64() { return read_pod<std::uint64_t>(); }
  std::int64_t read_i64() { return read_pod<std::int64_t>(); }
  double read_f64() { return read_pod<double>(); }
  std::string read_string() {
    std::uint64_t n = read_u64();
    check_available(n);
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  std::vector<double> read_f64_vector() {
    std::uint64_t n = read_u64();
    check_available(n * sizeof(double));
    std::vector<double> v(n);
    std::memcpy(v.data(), bytes_.data() + pos_, n * sizeof(double));
    pos_ += n * sizeof(double);
    return v;
  }
  bool at_end() const { return pos_ == bytes_.size(); }

 private:
  template <typename T>
  T read_pod() {
    check_available(sizeof(T));
    T v;
    std::memcpy(&v, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  void check_available(std::uint64_t n) const {
    if (pos_ + n > bytes_.size()) {
      throw CheckpointError("truncated checkpoint data");
    }
  }
  std::vector<unsigned char> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace rvic
