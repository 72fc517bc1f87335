#include "ddwave/harness/output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace ddwave::harness {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return file;
}

std::string json_number(double value) { return std::isfinite(value) ? format_number(value) : "null"; }

std::string json_string(const std::string& text) { return nlohmann::json(text).dump(); }

struct ValuePrinter {
  std::string operator()(std::nullptr_t) const { return "null"; }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return json_number(v); }
  std::string operator()(const std::string& v) const { return json_string(v); }
  std::string operator()(const std::vector<double>& v) const {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + json_number(v[i]);
    return out + "]";
  }
  std::string operator()(const std::vector<std::string>& v) const {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + json_string(v[i]);
    return out + "]";
  }
};

}  // namespace

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> header)
    : file_(open_for_write(path)), header_(std::move(header)) {
  for (std::size_t i = 0; i < header_.size(); ++i) file_ << (i ? "," : "") << header_[i];
  file_ << '\n';
}

void CsvWriter::separator() {
  if (filled_ == header_.size()) throw std::logic_error("csv row has more cells than the header");
  if (filled_++ > 0) file_ << ',';
}

CsvWriter& CsvWriter::add(double value) {
  separator();
  file_ << format_number(value);
  return *this;
}

CsvWriter& CsvWriter::add(std::int64_t value) {
  separator();
  file_ << value;
  return *this;
}

CsvWriter& CsvWriter::add(std::string_view text) {
  separator();
  file_ << text;
  return *this;
}

void CsvWriter::end_row() {
  if (filled_ != header_.size()) throw std::logic_error("csv row is shorter than the header");
  file_ << '\n';
  filled_ = 0;
}

void CsvWriter::row(std::initializer_list<double> values) {
  for (double v : values) add(v);
  end_row();
}

FlatJson& FlatJson::put(std::string key, Value value) {
  for (auto& [k, v] : members_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  members_.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string FlatJson::dump(int indent) const {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string out = "{\n";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    out += pad + "  " + json_string(members_[i].first) + ": " + std::visit(ValuePrinter{}, members_[i].second);
    out += i + 1 < members_.size() ? ",\n" : "\n";
  }
  return out + pad + "}";
}

std::string dump_array(const std::vector<FlatJson>& objects) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    out += "  " + objects[i].dump(2);
    out += i + 1 < objects.size() ? ",\n" : "\n";
  }
  return out + "]";
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream file = open_for_write(path);
  file << content;
  if (content.empty() || content.back() != '\n') file << '\n';
}

}  // namespace ddwave::harness
