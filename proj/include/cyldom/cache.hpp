#pragma once

#include <memory>
#include <string>

#include "cyldom/dp_engine.hpp"

namespace cyldom {

inline constexpr int kWasteTableFormatVersion = 1;

// "waste_<variant>_h<height>_n<n_max>_v<format>.json"
std::string cache_file_name(Variant v, int height, int n_max);

// Null when the file does not exist; Io / Format errors when it exists but
// cannot be read back, or describes a different table.
std::shared_ptr<const WasteTable> load_cached(const std::string& dir, Variant v, int height,
                                              int n_max);

// Writes atomically (temp file + rename); creates dir if needed. Returns the path.
std::string store_cached(const std::string& dir, const WasteTable& table);

}  // namespace cyldom
