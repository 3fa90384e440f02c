#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tcgen/spec_io.hpp"

namespace tcgen::cli {

enum class Format { text, json };

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;            // analysis completed (any verdict)
inline constexpr int kExitInput = 1;         // bad spec or arguments
inline constexpr int kExitInternal = 2;      // bug guard tripped
inline constexpr int kExitInconsistent = 3;  // theorem verdict contradicts the oracle

int cmd_check(const InstanceSpec& spec, Format format, std::ostream& out);

int cmd_eval(const InstanceSpec& spec, const std::string& x_text, const std::string& y_text,
             Format format, std::ostream& out, std::ostream& err);

int cmd_table(const InstanceSpec& spec, const std::string& step_text,
              const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  int denominator = 12;
  std::size_t witness_budget = 20000;
  Format format = Format::text;
};

int cmd_verify(const InstanceSpec& spec, const VerifyOptions& options, std::ostream& out);

int cmd_decompose(const InstanceSpec& spec, Format format, std::ostream& out);

}  // namespace tcgen::cli
