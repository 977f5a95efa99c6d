#include "cyldom/cache.hpp"

#include <filesystem>
#include <system_error>

#include "cyldom/error.hpp"

namespace cyldom {

namespace fs = std::filesystem;

std::string cache_file_name(Variant v, int height, int n_max) {
  return "waste_" + std::string(variant_name(v)) + "_h" + std::to_string(height) + "_n" +
         std::to_string(n_max) + "_v" + std::to_string(kWasteTableFormatVersion) + ".json";
}

std::shared_ptr<const WasteTable> load_cached(const std::string& dir, Variant v, int height,
                                              int n_max) {
  const fs::path path = fs::path(dir) / cache_file_name(v, height, n_max);
  std::error_code ec;
  if (!fs::exists(path, ec)) return nullptr;
  auto table = std::make_shared<const WasteTable>(WasteTable::load(path.string()));
  if (table->variant() != v || table->height() != height || table->n_max() != n_max)
    fail(ErrorKind::Format, "cache file " + path.string() + " describes a different table");
  return table;
}

std::string store_cached(const std::string& dir, const WasteTable& table) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create cache directory " + dir + ": " + ec.message());
  const fs::path path = fs::path(dir) / cache_file_name(table.variant(), table.height(), table.n_max());
  const fs::path tmp = path.string() + ".tmp";
  table.save(tmp.string());
  fs::rename(tmp, path, ec);
  if (ec) fail(ErrorKind::Io, "cannot move " + tmp.string() + " into place: " + ec.message());
  return path.string();
}

}  // namespace cyldom
