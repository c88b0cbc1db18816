#include "rectpack/packer.hpp"

#include <algorithm>

#include "rectpack/brick_packers.hpp"
#include "rectpack/dynbox.hpp"

namespace rectpack {

const std::vector<std::string>& packer_names() {
  static const std::vector<std::string> names{
      "brick-translation", "brick-rotation",  "brick-modified",      "dynbox-trans",
      "dynbox-rot",        "dynbox-rot-opt4", "dynbox-rot-combined"};
  return names;
}

std::unique_ptr<OnlinePacker> make_packer(std::string_view name) {
  if (name == "brick-translation") return std::make_unique<BrickPacker>(BrickVariant::translation);
  if (name == "brick-rotation") return std::make_unique<BrickPacker>(BrickVariant::rotation);
  if (name == "brick-modified") return std::make_unique<BrickPacker>(BrickVariant::modified);
  if (name == "dynbox-trans") return std::make_unique<DynBoxPacker>(DynBoxVariant::trans);
  if (name == "dynbox-rot") return std::make_unique<DynBoxPacker>(DynBoxVariant::rot);
  if (name == "dynbox-rot-opt4") return std::make_unique<DynBoxPacker>(DynBoxVariant::rot_opt4);
  if (name == "dynbox-rot-combined") {
    return std::make_unique<DynBoxPacker>(DynBoxVariant::rot_combined);
  }
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

ObjectiveClass packer_class(std::string_view name) {
  const auto& names = packer_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw ConfigError("unknown algorithm '" + std::string(name) + "'");
  }
  return name.substr(0, 6) == "brick-" ? ObjectiveClass::perimeter : ObjectiveClass::area;
}

}  // namespace rectpack
