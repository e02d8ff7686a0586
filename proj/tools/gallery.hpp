#pragma once

#include <string>
#include <vector>

namespace kneser::tools {

struct GalleryEntry {
  std::string name;       // file stem
  std::string program;    // setlang source
  std::vector<std::string> conclusions;  // expected tags, empty for profinite entries
  std::string roman;      // expected cascade tag, or empty
};

const std::vector<GalleryEntry>& gallery();

}  // namespace kneser::tools
