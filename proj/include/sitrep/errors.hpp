#pragma once
// Error taxonomy shared by all pipeline stages.
//
// Data problems (corrupt archives, inconsistent inputs) and transport
// problems (rate limits, unreachable services) are kept apart because the
// CLI maps them to different exit codes.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sitrep {

enum class errc {
  malformed_record,
  bad_timestamp,
  duplicate_id,
  conflicting_duplicate,
  empty_corpus,
  empty_input,
  unknown_entry,
  empty_after_normalization,
  input_mismatch,
  alignment,
  cache_io,
  bad_config,
  io,
  rate_limited,
  auth_failed,
  transport,
  bad_response,
};

inline std::string_view to_string(errc c) {
  switch (c) {
    case errc::malformed_record: return "MALFORMED_RECORD";
    case errc::bad_timestamp: return "BAD_TIMESTAMP";
    case errc::duplicate_id: return "DUPLICATE_ID";
    case errc::conflicting_duplicate: return "CONFLICTING_DUPLICATE";
    case errc::empty_corpus: return "EMPTY_CORPUS";
    case errc::empty_input: return "EMPTY_INPUT";
    case errc::unknown_entry: return "UNKNOWN_ENTRY";
    case errc::empty_after_normalization: return "EMPTY_AFTER_NORMALIZATION";
    case errc::input_mismatch: return "INPUT_MISMATCH";
    case errc::alignment: return "ALIGNMENT";
    case errc::cache_io: return "CACHE_IO";
    case errc::bad_config: return "BAD_CONFIG";
    case errc::io: return "IO";
    case errc::rate_limited: return "RATE_LIMITED";
    case errc::auth_failed: return "AUTH_FAILED";
    case errc::transport: return "TRANSPORT";
    case errc::bad_response: return "BAD_RESPONSE";
  }
  return "UNKNOWN";
}

// True for failures caused by a remote service rather than the data.
inline bool is_transport(errc c) {
  return c == errc::rate_limited || c == errc::auth_failed ||
         c == errc::transport || c == errc::bad_response;
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  // For record-level diagnostics; line numbers are 1-based.
  error(errc code, std::size_t line_no, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + "(line " +
                           std::to_string(line_no) + "): " + detail),
        code_(code),
        line_no_(line_no) {}

  errc code() const noexcept { return code_; }
  std::size_t line_no() const noexcept { return line_no_; }

 private:
  errc code_;
  std::size_t line_no_ = 0;
};

}  // namespace sitrep
