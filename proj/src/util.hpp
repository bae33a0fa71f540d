#ifndef CDRSCOPE_UTIL_HPP
#define CDRSCOPE_UTIL_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdrscope {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes:
// usage = 1, input = 2, compute = 3.
enum class ErrorKind { usage = 1, input = 2, compute = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(ErrorKind::usage, msg) {}
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(ErrorKind::input, msg) {}
};

class ComputeError : public Error {
 public:
  explicit ComputeError(const std::string& msg)
      : Error(ErrorKind::compute, msg) {}
};

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Strict numeric field parsers; `where` is prepended to the error message
// (callers pass "file:line").
double parse_double_field(std::string_view field, const std::string& where);
std::int64_t parse_int_field(std::string_view field, const std::string& where);

// FNV-1a, used for config hashes and artifact checksums in run manifests.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t v);

// Worker cap shared by every parallel loop: min(hardware, CDRSCOPE_THREADS).
unsigned worker_count();
void set_worker_cap(unsigned n);  // 0 restores the default

// Static partition of [0, n) over the worker pool. Each index is processed
// exactly once and results must be written to per-index slots so the outcome
// is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cdrscope

#endif
