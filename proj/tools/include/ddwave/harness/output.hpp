#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ddwave::harness {

/// %.17g, enough digits to round-trip any double. Non-finite values print as nan/inf/-inf.
std::string format_number(double value);

/// Comma-separated table with a fixed header. Cells are appended left to
/// right and a row is closed with end_row().
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);

  CsvWriter& add(double value);
  CsvWriter& add(std::int64_t value);
  CsvWriter& add(std::string_view text);
  void end_row();

  /// Convenience for all-numeric rows.
  void row(std::initializer_list<double> values);

  std::size_t columns() const noexcept { return header_.size(); }

 private:
  void separator();

  std::ofstream file_;
  std::vector<std::string> header_;
  std::size_t filled_ = 0;
};

/// A JSON object with scalar or array-of-scalar members, kept in insertion order.
/// Doubles are written with 17 significant digits and non-finite doubles as null.
class FlatJson {
 public:
  using Value = std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, std::vector<double>,
                             std::vector<std::string>>;

  FlatJson& set(std::string key, std::nullptr_t) { return put(std::move(key), nullptr); }
  FlatJson& set(std::string key, bool value) { return put(std::move(key), value); }
  FlatJson& set(std::string key, double value) { return put(std::move(key), value); }
  FlatJson& set(std::string key, std::int64_t value) { return put(std::move(key), value); }
  FlatJson& set(std::string key, int value) { return put(std::move(key), static_cast<std::int64_t>(value)); }
  FlatJson& set(std::string key, std::size_t value) {
    return put(std::move(key), static_cast<std::int64_t>(value));
  }
  FlatJson& set(std::string key, const char* text) { return put(std::move(key), std::string(text)); }
  FlatJson& set(std::string key, std::string text) { return put(std::move(key), std::move(text)); }
  FlatJson& set(std::string key, std::vector<double> values) { return put(std::move(key), std::move(values)); }
  FlatJson& set(std::string key, std::vector<std::string> values) {
    return put(std::move(key), std::move(values));
  }

  std::string dump(int indent = 2) const;

 private:
  FlatJson& put(std::string key, Value value);

  std::vector<std::pair<std::string, Value>> members_;
};

/// Pretty-printed JSON array of flat objects.
std::string dump_array(const std::vector<FlatJson>& objects);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ddwave::harness
