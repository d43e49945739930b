#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ca/freealg.hpp"
#include "ca/linalg.hpp"
#include "ca/param_poly.hpp"

namespace ca {

struct Arrow {
    int src = 0;
    int dst = 0;
    std::string label;
};

/// Finite quiver (directed multigraph).
class Quiver {
  public:
    int add_vertex(std::string label);
    int add_arrow(int src, int dst, std::string label);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::string& vertex_label(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool is_acyclic() const;
    /// Topological order of vertices, ties broken by vertex index.
    /// Throws CyclicQuiver if an oriented cycle exists.
    std::vector<int> topological_order() const;

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// Path: a start vertex plus a composable arrow sequence (possibly empty).
struct Path {
    int start = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    int end(const Quiver& q) const {
        return arrows.empty() ? start : q.arrow(arrows.back()).dst;
    }

    auto operator<=>(const Path&) const = default;
};

/// All paths of an acyclic quiver.
std::vector<Path> all_paths(const Quiver& q);

/// Element of the path algebra with ParamPoly coefficients.
class PathElem {
  public:
    PathElem() = default;
    explicit PathElem(QuiverPtr q) : quiver_(std::move(q)) {}

    static PathElem zero(QuiverPtr q) { return PathElem(std::move(q)); }
    static PathElem idempotent(QuiverPtr q, int vertex);
    static PathElem arrow_elem(QuiverPtr q, int arrow);
    static PathElem path(QuiverPtr q, const Path& p, ParamPoly c = ParamPoly::constant(1));
    /// Sum of all vertex idempotents; the two-sided unit.
    static PathElem unit(QuiverPtr q);

    const QuiverPtr& quiver() const { return quiver_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Path, ParamPoly>& terms() const { return terms_; }

    PathElem operator-() const;
    PathElem& operator+=(const PathElem& o);
    PathElem& operator-=(const PathElem& o);
    friend PathElem operator+(PathElem a, const PathElem& b) { return a += b; }
    friend PathElem operator-(PathElem a, const PathElem& b) { return a -= b; }
    PathElem& scale(const ParamPoly& c);

    friend bool operator==(const PathElem& a, const PathElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PathElem& a, const PathElem& b) { return !(a == b); }

    void add_term(const Path& p, const ParamPoly& c);

    std::string str() const;

  private:
    QuiverPtr quiver_;
    std::map<Path, ParamPoly> terms_;
};

/// Bilinear extension of path concatenation. Throws QuiverMismatch when the
/// operands live over different quivers.
PathElem path_mul(const PathElem& a, const PathElem& b);

/// True iff every path in the support of x carries at least n arrows, i.e.
/// x lies in the n-th power of the arrow ideal.
bool ideal_power_membership(const PathElem& x, int n);

/// Certified embedding of an acyclic path algebra into upper triangular
/// matrices: a multiplicative, basis-injective assignment path -> matrix.
struct TriangularEmbedding {
    enum class Mode { VertexUnits, RegularRep };
    Mode mode;
    std::size_t dim = 0;
    std::vector<Path> basis;
    std::map<Path, RatMatrix> images;

    const RatMatrix& image_of(const Path& p) const;
};

/// Throws CyclicQuiver if q has an oriented cycle.
TriangularEmbedding acyclic_to_triangular(const Quiver& q);

/// The layered quiver Q_m: vertices Delta x {1..m+1}, complete bipartite
/// arrows between consecutive layers. Degenerates to the one-vertex quiver
/// when m = 0 or Delta is empty (k = 1).
struct QmQuiver {
    int k = 0;
    int m = 0;
    std::vector<DeltaIndex> delta;
    QuiverPtr quiver;

    bool trivial() const { return delta.empty() || m == 0; }
    int vertex_index(const DeltaIndex& d, int p) const;
    int arrow_index(const DeltaIndex& d, const DeltaIndex& dp, int p) const;

  private:
    friend QmQuiver build_qm(int k, int m);
    std::map<DeltaIndex, int> delta_pos_;
};

QmQuiver build_qm(int k, int m);

}  // namespace ca
