#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ngeta {

enum class ErrorCode {
  precondition,       // empty vertex set, bad vertex id, ...
  order_out_of_range, // order outside what the operation supports
  invalid_parameter,  // family parameters
  not_a_tree,
  disconnected_input,
  malformed_record,   // graph6 decoding
  usage,              // command line
  internal,           // a closed-form identity failed: implementation bug
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ngeta
