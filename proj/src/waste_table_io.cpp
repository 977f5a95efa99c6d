#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cyldom/dp_engine.hpp"
#include "cyldom/error.hpp"

namespace cyldom {

namespace {

constexpr int kFormatVersion = 1;

nlohmann::ordered_json waste_to_json(Waste w) {
  return finite(w) ? nlohmann::ordered_json(w) : nlohmann::ordered_json();
}

Waste waste_from_json(const nlohmann::json& j) {
  if (j.is_null()) return kInfiniteWaste;
  if (!j.is_number_integer()) fail(ErrorKind::Format, "waste entries must be integers or null");
  return j.get<Waste>();
}

}  // namespace

std::string WasteTable::to_json() const {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["variant"] = std::string(variant_name(variant_));
  j["height"] = height_;
  j["n_max"] = n_max();
  auto& d = j["d"] = nlohmann::ordered_json::array();
  for (Waste w : d_) d.push_back(waste_to_json(w));
  if (global_) {
    j["global"] = {{"N", global_->first}, {"p", global_->period}, {"q", global_->increment}};
  } else {
    j["global"] = nullptr;
  }
  j["seeds_total"] = seeds_total_;
  j["seeds_certified"] = seeds_certified_;
  if (residues_) {
    auto& r = j["residue_constants"] = nlohmann::ordered_json::array();
    for (Waste w : *residues_) r.push_back(waste_to_json(w));
  } else {
    j["residue_constants"] = nullptr;
  }
  auto& tail = j["d_tail"] = nlohmann::ordered_json::array();
  for (Waste w : tail_) tail.push_back(waste_to_json(w));
  return j.dump(1);
}

WasteTable WasteTable::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Format, std::string("waste table is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("format_version", 0) != kFormatVersion)
      fail(ErrorKind::Format, "unsupported waste table format version");
    const auto variant = parse_variant(j.at("variant").get<std::string>());
    if (!variant) fail(ErrorKind::Format, "unknown variant in waste table");
    WasteTable t;
    t.variant_ = *variant;
    t.height_ = j.at("height").get<int>();
    for (const auto& w : j.at("d")) t.d_.push_back(waste_from_json(w));
    if (t.d_.empty() || t.n_max() != j.at("n_max").get<int>())
      fail(ErrorKind::Format, "waste series length does not match n_max");
    t.seeds_total_ = j.at("seeds_total").get<std::size_t>();
    t.seeds_certified_ = j.at("seeds_certified").get<std::size_t>();
    if (j.contains("d_tail"))
      for (const auto& w : j.at("d_tail")) t.tail_.push_back(waste_from_json(w));
    if (const auto& g = j.at("global"); !g.is_null()) {
      t.global_ = GlobalCertificate{g.at("N").get<int>(), g.at("p").get<int>(),
                                    g.at("q").get<Waste>()};
      if (t.global_->period < 1 ||
          t.global_->first + t.global_->period - 1 >
              t.n_max() + static_cast<int>(t.tail_.size()))
        fail(ErrorKind::Format, "global certificate not covered by the recorded series");
    }
    if (const auto& r = j.at("residue_constants"); !r.is_null()) {
      std::vector<Waste> res;
      for (const auto& w : r) res.push_back(waste_from_json(w));
      t.residues_ = std::move(res);
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Format, std::string("malformed waste table: ") + e.what());
  }
}

void WasteTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot open " + path + " for writing");
  out << to_json() << '\n';
  if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

WasteTable WasteTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace cyldom
