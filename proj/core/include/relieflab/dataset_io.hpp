#pragma once

#include <filesystem>

#include "relieflab/dataset.hpp"

namespace relieflab {

// Dataset on disk: a CSV with header row f0,f1,...,class (missing values
// serialize as the empty string) and a JSON sidecar <stem>.meta.json with
// the feature metadata:
//   {"features":[{"name","kind":"numeric"|"categoric","domainSize"?,
//     "relevant":bool}],"classes":int}

void write_dataset(const Dataset& ds, const std::filesystem::path& csv_path);

// Reads the CSV plus its sidecar and recomputes statistics.
Dataset read_dataset(const std::filesystem::path& csv_path);

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

}  // namespace relieflab
