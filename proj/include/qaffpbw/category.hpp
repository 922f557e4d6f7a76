#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaffpbw/affine.hpp"
#include "qaffpbw/fusion.hpp"

namespace qaff {

/// An affine type together with its denominator provider (if any) and the
/// fusion facts available to the rewrite system. Immutable once built.
class HLCategory {
 public:
  explicit HLCategory(AffineTypeInfo type);
  HLCategory(AffineTypeInfo type, DenominatorTable table);

  /// Type with its built-in provider and no fusion facts.
  static HLCategory make(std::string_view name) { return HLCategory(type_info(name)); }
  /// Same, with the built-in fusion facts loaded.
  static HLCategory with_builtin_facts(std::string_view name);

  HLCategory with_facts(FusionFacts facts) const;

  const AffineTypeInfo& type() const { return type_; }
  bool has_provider() const { return table_.has_value(); }
  /// Throws NoProviderError when no table is attached.
  const DenominatorTable& denominators() const;
  const FusionFacts& fusion() const { return fusion_; }

 private:
  AffineTypeInfo type_;
  std::optional<DenominatorTable> table_;
  FusionFacts fusion_;
};

struct QuiverArrow {
  SigmaPoint from;
  SigmaPoint to;
  int multiplicity = 0;
};

struct SigmaQuiver {
  std::vector<SigmaPoint> vertices;
  std::vector<QuiverArrow> arrows;

  /// Graphviz output; vertex ids "i_p", one edge line per unit of multiplicity.
  std::string to_dot() const;
  /// Connectedness of the underlying undirected graph.
  bool connected() const;
};

/// Vertices are the sigma_0 points with exponent in [lo, hi]; the arrow
/// multiplicity (i,x) -> (j,y) is the zero order of d_{i,j} at p_y - p_x.
SigmaQuiver sigma_quiver(const HLCategory& cat, int lo, int hi);

}  // namespace qaff
