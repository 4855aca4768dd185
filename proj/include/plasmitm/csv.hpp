#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "plasmitm/config.hpp"

namespace plasmitm {

// CSV with a leading comment block carrying the config hash, one header row,
// and %.17g-formatted values; byte-identical across reruns of the same config.
class CsvWriter {
public:
  CsvWriter(const std::string& path, const RunConfig& cfg,
            const std::vector<std::string>& columns);
  ~CsvWriter();

  void row(const std::vector<double>& values);
  void comment(const std::string& text);

  // call on failure: removes the partial file
  void discard();

private:
  std::ofstream out_;
  std::string path_;
  size_t ncols_;
  bool discarded_ = false;
};

}  // namespace plasmitm
