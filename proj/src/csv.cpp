#include "plasmitm/csv.hpp"

#include <cstdio>

#include "plasmitm/errors.hpp"

namespace plasmitm {

CsvWriter::CsvWriter(const std::string& path, const RunConfig& cfg,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), path_(path), ncols_(columns.size()) {
  if (!out_) throw ConfigError("cannot open output file '" + path + "'");
  out_ << "# config_hash=" << config_hash(cfg) << "\n";
  out_ << "# " << canonical_string(cfg) << "\n";
  for (size_t i = 0; i < columns.size(); ++i)
    out_ << columns[i] << (i + 1 < columns.size() ? "," : "");
  out_ << "\n";
}

CsvWriter::~CsvWriter() {
  if (!discarded_) out_.flush();
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != ncols_)
    throw NumericError("csv row width mismatch");
  char buf[40];
  for (size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    out_ << buf << (i + 1 < values.size() ? "," : "");
  }
  out_ << "\n";
}

void CsvWriter::discard() {
  out_.close();
  std::remove(path_.c_str());
  discarded_ = true;
}

}  // namespace plasmitm
