#include "vscif/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace vscif {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_document(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorKind::Parse, e.what());
  }
}

const ordered_json& require(const ordered_json& obj, const char* key) {
  if (!obj.is_object()) raise(ErrorKind::Parse, "expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) raise(ErrorKind::Parse, std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t as_int(const ordered_json& v, const char* what) {
  if (!v.is_number_integer()) raise(ErrorKind::Parse, std::string(what) + " must be an integer");
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    raise(ErrorKind::Structural, std::string(what) + " out of range");
  return v.get<std::int64_t>();
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  ordered_json doc;
  auto items = ordered_json::array();
  for (const auto& item : instance.items()) items.push_back(item.size);
  auto classes = ordered_json::array();
  for (const auto& c : instance.classes()) {
    ordered_json cls;
    cls["capacity"] = c.capacity;
    cls["cost"] = c.cost;
    classes.push_back(std::move(cls));
  }
  doc["items"] = std::move(items);
  doc["classes"] = std::move(classes);
  doc["cut_limit"] = instance.cut_limit();
  doc["cost_model"] = std::string(to_string(instance.cost_model()));
  if (instance.known_optimum())
    doc["known_optimum"] = *instance.known_optimum();
  else
    doc["known_optimum"] = nullptr;
  return doc.dump() + "\n";
}

Instance instance_from_json(std::string_view text) {
  const auto doc = parse_document(text);
  const auto& items = require(doc, "items");
  if (!items.is_array()) raise(ErrorKind::Parse, "'items' must be an array");
  std::vector<Size> sizes;
  sizes.reserve(items.size());
  for (const auto& v : items) sizes.push_back(as_int(v, "item size"));

  const auto& classes_json = require(doc, "classes");
  if (!classes_json.is_array()) raise(ErrorKind::Parse, "'classes' must be an array");
  std::vector<BinClass> classes;
  for (const auto& c : classes_json) {
    classes.push_back(BinClass{as_int(require(c, "capacity"), "capacity"),
                               as_int(require(c, "cost"), "cost")});
  }

  const auto cut_limit = as_int(require(doc, "cut_limit"), "cut_limit");
  if (cut_limit < 0 || cut_limit > std::numeric_limits<int>::max())
    raise(ErrorKind::Structural, "cut_limit out of range");

  const auto& model = require(doc, "cost_model");
  if (!model.is_string()) raise(ErrorKind::Parse, "'cost_model' must be a string");

  std::optional<Cost> known;
  if (auto it = doc.find("known_optimum"); it != doc.end() && !it->is_null())
    known = as_int(*it, "known_optimum");

  return Instance(std::move(sizes), std::move(classes), static_cast<int>(cut_limit),
                  parse_cost_model(model.get<std::string>()), known);
}

std::string packing_to_json(const Packing& packing) {
  ordered_json doc;
  auto bins = ordered_json::array();
  for (const auto& bin : packing.bins) {
    ordered_json b;
    b["class_index"] = bin.class_index;
    auto fragments = ordered_json::array();
    for (const auto& f : bin.contents) {
      ordered_json fr;
      fr["parent"] = f.parent;
      fr["piece"] = f.piece;
      fr["size"] = f.size;
      fragments.push_back(std::move(fr));
    }
    b["fragments"] = std::move(fragments);
    bins.push_back(std::move(b));
  }
  doc["bins"] = std::move(bins);
  return doc.dump() + "\n";
}

Packing packing_from_json(std::string_view text) {
  const auto doc = parse_document(text);
  const auto& bins = require(doc, "bins");
  if (!bins.is_array()) raise(ErrorKind::Parse, "'bins' must be an array");
  Packing packing;
  for (const auto& b : bins) {
    const auto index = as_int(require(b, "class_index"), "class_index");
    if (index < 0) raise(ErrorKind::Structural, "negative class_index");
    PackedBin bin;
    bin.class_index = static_cast<std::size_t>(index);
    const auto& fragments = require(b, "fragments");
    if (!fragments.is_array()) raise(ErrorKind::Parse, "'fragments' must be an array");
    for (const auto& f : fragments) {
      const auto parent = as_int(require(f, "parent"), "parent");
      const auto piece = as_int(require(f, "piece"), "piece");
      const auto size = as_int(require(f, "size"), "size");
      if (parent < std::numeric_limits<ItemId>::min() || parent > std::numeric_limits<ItemId>::max())
        raise(ErrorKind::Structural, "fragment parent out of range");
      if (piece < 1 || piece > std::numeric_limits<int>::max())
        raise(ErrorKind::Structural, "fragment piece index must be positive");
      if (size < 1) raise(ErrorKind::Structural, "fragment size must be positive");
      bin.contents.push_back(Fragment{static_cast<ItemId>(parent), static_cast<int>(piece), size});
    }
    packing.bins.push_back(std::move(bin));
  }
  return packing;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::Io, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) raise(ErrorKind::Io, "error reading '" + path + "'");
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) raise(ErrorKind::Io, "error writing '" + path + "'");
}

}  // namespace vscif
