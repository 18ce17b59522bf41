// Group descriptors ("Z12", "Z2xZ2xZ3", "Z7:Z3(2)", "file:g.tbl", ...) and
// the catalog of named families used by the audit.

#ifndef POWERGRAPH_CATALOG_HPP_
#define POWERGRAPH_CATALOG_HPP_

#include "powergraph/group.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace powergraph {

class DescriptorError : public std::runtime_error {
public:
  DescriptorError(std::size_t position, const std::string& msg)
      : std::runtime_error("at position " + std::to_string(position) + ": " + msg),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

struct GroupDescriptor {
  enum class Family {
    Cyclic,       // Zn
    Dihedral,     // Dn, n = group order
    Quaternion,   // Qn
    Semidihedral, // SDn
    Modular,      // Mn, n = p^k
    Elementary,   // En, n = p^k
    Semidirect,   // Zn:Zm(k)
    Symmetric,    // Sn, n = degree
    Alternating,  // An
    Product,      // factors joined by 'x'
    File,         // file:<path>
  };

  Family family = Family::Cyclic;
  std::vector<std::uint64_t> params;
  std::vector<GroupDescriptor> factors;
  std::string path;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Throws DescriptorError with the offending character position.
GroupDescriptor parse_descriptor(std::string_view text);
/// Canonical text; parse_descriptor(render(d)) == d.
std::string render(const GroupDescriptor& d);
/// Constructs the group and labels it with render(d).
FiniteGroup build_group(const GroupDescriptor& d, std::size_t bound = kDefaultConstructionBound);

enum class Family {
  Cyclic,
  Abelian,
  Dihedral,
  Quaternion,
  Semidihedral,
  Modular,
  Elementary,
  SemidirectPQ,
  PermutationNamed,
};

const char* to_string(Family f);
/// All families in declaration order.
std::vector<Family> all_families();
/// Accepts the names produced by to_string; throws std::invalid_argument.
Family parse_family(std::string_view name);

inline constexpr std::uint64_t kMaxCatalogOrder = 5000;

struct CatalogSpec {
  std::uint64_t max_order = 200;
  std::vector<Family> families = all_families();
};

struct CatalogEntry {
  std::uint64_t order;
  std::string label;
  GroupDescriptor descriptor;
};

/// Sorted by (order, label), one entry per label.
std::vector<CatalogEntry> generate_catalog(const CatalogSpec& spec);

} // namespace powergraph

#endif // POWERGRAPH_CATALOG_HPP_
