#ifndef GRPTOOL_CATALOG_HPP
#define GRPTOOL_CATALOG_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grptool/group.hpp"

namespace grptool {

struct NamedGroup {
  std::string name;
  GroupTable group;
};

// .grp text: `degree <n>` first, optionally `name <s>`, then one cycle
// expression per line. `#` starts a comment; blank lines are skipped.
// `source` tags parse errors ("file:line: ...").
NamedGroup parse_group_file(const std::string& text, const std::string& source,
                            std::size_t max_elements = kDefaultMaxElements);

NamedGroup load_group_file(const std::string& path,
                           std::size_t max_elements = kDefaultMaxElements);

// One line of a catalog spec. Families take a parameter range, products a
// list of family:parameter factors, files a .grp path.
struct CatalogEntry {
  enum class Kind { family_range, quaternion, product, file };
  Kind kind = Kind::family_range;
  std::string family;       // family_range
  unsigned lo = 0, hi = 0;  // family_range
  std::vector<std::pair<std::string, unsigned>> factors;  // product
  std::string path;         // file
};

struct CatalogSpec {
  std::vector<CatalogEntry> entries;
};

// Catalog spec text: one entry per line.
//   cyclic 1..32 | dihedral 3..16 | symmetric 3..6 | alternating 3..6
//   quaternion8
//   product cyclic:2 symmetric:3
//   file path/to/group.grp
CatalogSpec parse_catalog_spec(const std::string& text,
                               const std::string& source);

// The built-in verification catalog.
const std::string& default_catalog_text();

// Expands entries in spec order, parameters ascending. Group names are
// C<n>/D<n>/S<n>/A<n>/Q8, products joined with "x" (e.g. C2xS3). Relative
// file entries resolve against base_dir.
std::vector<NamedGroup> expand_catalog(
    const CatalogSpec& spec, std::size_t max_elements = kDefaultMaxElements,
    const std::string& base_dir = {});

// C<n>, D<n>, S<n>, A<n>, Q8 — the names accepted wherever a file path is.
// Returns false if `name` is not of that shape.
bool is_builtin_name(const std::string& name);

NamedGroup builtin_group(const std::string& name,
                         std::size_t max_elements = kDefaultMaxElements);

// Builtin name first, then file path; anything else is a usage error.
NamedGroup load_group_argument(const std::string& arg,
                               std::size_t max_elements = kDefaultMaxElements);

} // namespace grptool

#endif
