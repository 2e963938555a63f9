#pragma once

// File formats used by the command line tool.
//
// Run record (JSON, keys in this order):
//   {"format_version":1,"theta_a":<rad>,"theta_b":<rad>,"n":<int>,
//    "seed":<u64|null>,"pairs":[[a,b],...]}
// with a, b explicit +1/-1 integers.
//
// Raw list file: +1/-1 integers separated by whitespace or commas; '#'
// starts a comment running to end of line.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "bellmatch/error.hpp"
#include "bellmatch/lists.hpp"
#include "bellmatch/sampler.hpp"

namespace bellmatch::cli {

inline constexpr int kFormatVersion = 1;

/// Malformed file contents.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

struct RunRecord {
  double theta_a = 0.0;
  double theta_b = 0.0;
  std::optional<std::uint64_t> seed;
  DataList a;
  DataList b;

  std::size_t n() const { return a.size(); }
  PairedRun to_run() const;
  static RunRecord from_run(const PairedRun& run);
};

std::string to_json(const RunRecord& record);
RunRecord parse_run_record(std::string_view text);

RunRecord read_run_record(const std::filesystem::path& path);
void write_run_record(const std::filesystem::path& path, const RunRecord& record);

/// Throws InvalidInput for non +1/-1 values and IoError if unreadable.
DataList read_list_file(const std::filesystem::path& path);
DataList parse_list_text(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// "%.9g".
std::string format_real(double v);
/// "num/den", or "num" when den == 1.
std::string format_ratio(const Ratio& r);

}  // namespace bellmatch::cli
