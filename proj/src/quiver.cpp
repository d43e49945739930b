#include "ca/quiver.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ca/errors.hpp"

namespace ca {

int Quiver::add_vertex(std::string label) {
    vertices_.push_back(std::move(label));
    return static_cast<int>(vertices_.size()) - 1;
}

int Quiver::add_arrow(int src, int dst, std::string label) {
    if (src < 0 || dst < 0 || src >= static_cast<int>(vertices_.size()) ||
        dst >= static_cast<int>(vertices_.size()))
        throw BadParameter("add_arrow: endpoint is not a declared vertex");
    arrows_.push_back({src, dst, std::move(label)});
    return static_cast<int>(arrows_.size()) - 1;
}

std::vector<int> Quiver::topological_order() const {
    std::size_t n = vertices_.size();
    std::vector<int> indeg(n, 0);
    for (const auto& a : arrows_) ++indeg[static_cast<std::size_t>(a.dst)];
    // Kahn's algorithm; the ready set is kept sorted by vertex index.
    std::vector<int> order;
    std::vector<bool> done(n, false);
    while (order.size() < n) {
        int next = -1;
        for (std::size_t v = 0; v < n; ++v)
            if (!done[v] && indeg[v] == 0) {
                next = static_cast<int>(v);
                break;
            }
        if (next < 0) throw CyclicQuiver("quiver has an oriented cycle");
        done[static_cast<std::size_t>(next)] = true;
        order.push_back(next);
        for (const auto& a : arrows_)
            if (a.src == next) --indeg[static_cast<std::size_t>(a.dst)];
    }
    return order;
}

bool Quiver::is_acyclic() const {
    try {
        topological_order();
        return true;
    } catch (const CyclicQuiver&) {
        return false;
    }
}

std::vector<Path> all_paths(const Quiver& q) {
    if (!q.is_acyclic()) throw CyclicQuiver("all_paths: quiver has an oriented cycle");
    std::vector<Path> paths;
    std::deque<Path> frontier;
    for (int v = 0; v < static_cast<int>(q.num_vertices()); ++v) frontier.push_back(Path{v, {}});
    while (!frontier.empty()) {
        Path p = frontier.front();
        frontier.pop_front();
        paths.push_back(p);
        int endv = p.end(q);
        for (int a = 0; a < static_cast<int>(q.num_arrows()); ++a) {
            if (q.arrow(a).src != endv) continue;
            Path ext = p;
            ext.arrows.push_back(a);
            frontier.push_back(std::move(ext));
        }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

PathElem PathElem::idempotent(QuiverPtr q, int vertex) {
    PathElem e(std::move(q));
    e.add_term(Path{vertex, {}}, ParamPoly::constant(1));
    return e;
}

PathElem PathElem::arrow_elem(QuiverPtr q, int arrow) {
    Path p{q->arrow(arrow).src, {arrow}};
    PathElem e(std::move(q));
    e.add_term(p, ParamPoly::constant(1));
    return e;
}

PathElem PathElem::path(QuiverPtr q, const Path& p, ParamPoly c) {
    PathElem e(std::move(q));
    e.add_term(p, c);
    return e;
}

PathElem PathElem::unit(QuiverPtr q) {
    PathElem e(q);
    for (int v = 0; v < static_cast<int>(q->num_vertices()); ++v)
        e.add_term(Path{v, {}}, ParamPoly::constant(1));
    return e;
}

void PathElem::add_term(const Path& p, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PathElem PathElem::operator-() const {
    PathElem r(quiver_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

PathElem& PathElem::operator+=(const PathElem& o) {
    if (!quiver_) quiver_ = o.quiver_;
    if (o.quiver_ && quiver_ != o.quiver_) throw QuiverMismatch("adding elements over different quivers");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

PathElem& PathElem::operator-=(const PathElem& o) {
    if (!quiver_) quiver_ = o.quiver_;
    if (o.quiver_ && quiver_ != o.quiver_) throw QuiverMismatch("subtracting elements over different quivers");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

PathElem& PathElem::scale(const ParamPoly& c) {
    std::map<Path, ParamPoly> scaled;
    for (const auto& [p, v] : terms_) {
        ParamPoly nc = v * c;
        if (!nc.is_zero()) scaled.emplace(p, std::move(nc));
    }
    terms_ = std::move(scaled);
    return *this;
}

std::string PathElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*";
        if (p.arrows.empty())
            os << quiver_->vertex_label(p.start);
        else
            for (std::size_t i = 0; i < p.arrows.size(); ++i) {
                if (i) os << ".";
                os << quiver_->arrow(p.arrows[i]).label;
            }
    }
    return os.str();
}

PathElem path_mul(const PathElem& a, const PathElem& b) {
    if (a.quiver() && b.quiver() && a.quiver() != b.quiver())
        throw QuiverMismatch("multiplying elements over different quivers");
    QuiverPtr q = a.quiver() ? a.quiver() : b.quiver();
    PathElem r(q);
    if (!q) return r;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            if (pa.end(*q) != pb.start) continue;  // non-composable paths multiply to 0
            Path p = pa;
            p.arrows.insert(p.arrows.end(), pb.arrows.begin(), pb.arrows.end());
            r.add_term(p, ca * cb);
        }
    return r;
}

bool ideal_power_membership(const PathElem& x, int n) {
    for (const auto& [p, c] : x.terms())
        if (static_cast<int>(p.length()) < n) return false;
    return true;
}

const RatMatrix& TriangularEmbedding::image_of(const Path& p) const {
    auto it = images.find(p);
    if (it == images.end()) throw BadParameter("image_of: path not in basis");
    return it->second;
}

TriangularEmbedding acyclic_to_triangular(const Quiver& q) {
    std::vector<int> topo = q.topological_order();
    std::vector<int> pos(q.num_vertices());
    for (std::size_t i = 0; i < topo.size(); ++i) pos[static_cast<std::size_t>(topo[i])] = static_cast<int>(i);

    std::vector<Path> paths = all_paths(q);

    // First route: path -> E_{pos(src), pos(dst)} over the vertex index set.
    // Multiplicative by path composition; injective iff endpoints determine
    // the path.
    std::map<std::pair<int, int>, int> seen;
    bool endpoint_injective = true;
    for (const auto& p : paths) {
        auto key = std::make_pair(pos[static_cast<std::size_t>(p.start)],
                                  pos[static_cast<std::size_t>(p.end(q))]);
        if (!seen.emplace(key, 1).second) {
            endpoint_injective = false;
            break;
        }
    }

    TriangularEmbedding emb;
    emb.basis = paths;
    if (endpoint_injective) {
        emb.mode = TriangularEmbedding::Mode::VertexUnits;
        emb.dim = q.num_vertices();
        for (const auto& p : paths) {
            RatMatrix m(emb.dim, emb.dim);
            m(static_cast<std::size_t>(pos[static_cast<std::size_t>(p.start)]),
              static_cast<std::size_t>(pos[static_cast<std::size_t>(p.end(q))])) = Rational(1);
            emb.images.emplace(p, std::move(m));
        }
        return emb;
    }

    // Fallback: left regular representation on the path basis ordered by
    // decreasing length (then canonically); always faithful and triangular.
    std::vector<Path> ordered = paths;
    std::stable_sort(ordered.begin(), ordered.end(), [&](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        if (pos[static_cast<std::size_t>(a.start)] != pos[static_cast<std::size_t>(b.start)])
            return pos[static_cast<std::size_t>(a.start)] < pos[static_cast<std::size_t>(b.start)];
        return a < b;
    });
    std::map<Path, std::size_t> index;
    for (std::size_t i = 0; i < ordered.size(); ++i) index.emplace(ordered[i], i);

    emb.mode = TriangularEmbedding::Mode::RegularRep;
    emb.dim = ordered.size();
    for (const auto& p : paths) {
        RatMatrix m(emb.dim, emb.dim);
        for (std::size_t j = 0; j < ordered.size(); ++j) {
            const Path& r = ordered[j];
            if (p.end(q) != r.start) continue;
            Path pr = p;
            pr.arrows.insert(pr.arrows.end(), r.arrows.begin(), r.arrows.end());
            m(index.at(pr), j) = Rational(1);
        }
        emb.images.emplace(p, std::move(m));
    }
    return emb;
}

int QmQuiver::vertex_index(const DeltaIndex& d, int p) const {
    // Vertices are ordered layer-major so the identity order is topological.
    return (p - 1) * static_cast<int>(delta.size()) + delta_pos_.at(d);
}

int QmQuiver::arrow_index(const DeltaIndex& d, const DeltaIndex& dp, int p) const {
    int nd = static_cast<int>(delta.size());
    return (p - 1) * nd * nd + delta_pos_.at(d) * nd + delta_pos_.at(dp);
}

QmQuiver build_qm(int k, int m) {
    if (k < 1 || m < 0) throw BadParameter("build_qm: need k >= 1 and m >= 0");
    QmQuiver qm;
    qm.k = k;
    qm.m = m;
    qm.delta = delta_set(k);
    for (std::size_t i = 0; i < qm.delta.size(); ++i)
        qm.delta_pos_.emplace(qm.delta[i], static_cast<int>(i));

    auto q = std::make_shared<Quiver>();
    if (qm.delta.empty() || m == 0) {
        q->add_vertex("*");
        qm.quiver = q;
        return qm;
    }
    for (int p = 1; p <= m + 1; ++p)
        for (const auto& d : qm.delta) {
            std::ostringstream os;
            os << "q(" << d.str() << "," << p << ")";
            q->add_vertex(os.str());
        }
    for (int p = 1; p <= m; ++p)
        for (const auto& d : qm.delta)
            for (const auto& dp : qm.delta) {
                std::ostringstream os;
                os << "v(" << d.str() << "," << dp.str() << "," << p << ")";
                q->add_arrow(qm.vertex_index(d, p), qm.vertex_index(dp, p + 1), os.str());
            }
    qm.quiver = q;
    return qm;
}

}  // namespace ca
