#include "polybound/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "polybound/error.hpp"

namespace polybound {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next non-empty line split into tokens; throws at end of input.
  std::vector<std::string> tokens(const char* what) {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      std::vector<std::string> out;
      std::string tok;
      while (ss >> tok) out.push_back(tok);
      if (!out.empty()) return out;
    }
    throw input_error("unexpected end of input, expected " + std::string(what));
  }

  std::optional<std::vector<std::string>> maybe_tokens() {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      std::vector<std::string> out;
      std::string tok;
      while (ss >> tok) out.push_back(tok);
      if (!out.empty()) return out;
    }
    return std::nullopt;
  }

  void expect(const std::vector<std::string>& toks, std::initializer_list<const char*> words) {
    std::size_t i = 0;
    for (const char* w : words) {
      if (i >= toks.size() || toks[i] != w) fail(std::string("expected '") + w + "'");
      ++i;
    }
  }

  std::size_t count(const std::string& tok) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(tok, &pos);
      if (pos != tok.size()) fail("bad count '" + tok + "'");
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      fail("bad count '" + tok + "'");
    }
  }

  Rational rational(const std::string& tok) {
    try {
      return parse_rational(tok);
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error("line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

void write_point(std::ostream& os, const Vector& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << to_string(p[i]);
  }
  os << '\n';
}

Vector read_point(LineReader& in, std::size_t d, const char* what) {
  auto toks = in.tokens(what);
  if (toks.size() != d) in.fail("expected " + std::to_string(d) + " entries, got " + std::to_string(toks.size()));
  Vector p;
  for (const auto& t : toks) p.push_back(in.rational(t));
  return p;
}

}  // namespace

void write_hrep(std::ostream& os, const HRep& h) {
  os << "polybound-hrep 1\n";
  os << "dim " << h.dim << " rows " << h.rows.size() << '\n';
  for (const auto& row : h.rows) {
    for (const auto& x : row.a) os << to_string(x) << ' ';
    os << to_string(row.b) << '\n';
  }
}

HRep read_hrep(std::istream& is) {
  LineReader in(is);
  auto header = in.tokens("header");
  in.expect(header, {"polybound-hrep", "1"});
  auto sizes = in.tokens("dim/rows line");
  if (sizes.size() != 4) in.fail("expected 'dim <d> rows <m>'");
  in.expect({sizes[0]}, {"dim"});
  in.expect({sizes[2]}, {"rows"});
  HRep h;
  h.dim = in.count(sizes[1]);
  const std::size_t m = in.count(sizes[3]);
  for (std::size_t r = 0; r < m; ++r) {
    Vector vals = read_point(in, h.dim + 1, "inequality row");
    Rational b = vals.back();
    vals.pop_back();
    h.rows.push_back({std::move(vals), std::move(b)});
  }
  h.validate();
  return h;
}

void write_vrep(std::ostream& os, const VRep& v) {
  os << "polybound-vrep 1\n";
  os << "dim " << v.dim << '\n';
  os << "vertices " << v.vertices.size() << '\n';
  for (const auto& p : v.vertices) write_point(os, p);
  os << "rays " << v.rays.size() << '\n';
  for (const auto& r : v.rays) write_point(os, r);
}

VRep read_vrep(std::istream& is) {
  LineReader in(is);
  in.expect(in.tokens("header"), {"polybound-vrep", "1"});
  auto dim = in.tokens("dim line");
  in.expect(dim, {"dim"});
  if (dim.size() != 2) in.fail("expected 'dim <d>'");
  VRep v;
  v.dim = in.count(dim[1]);
  auto vs = in.tokens("vertices line");
  in.expect(vs, {"vertices"});
  if (vs.size() != 2) in.fail("expected 'vertices <k>'");
  const std::size_t k = in.count(vs[1]);
  for (std::size_t i = 0; i < k; ++i) v.vertices.push_back(read_point(in, v.dim, "vertex"));
  auto rs = in.tokens("rays line");
  in.expect(rs, {"rays"});
  if (rs.size() != 2) in.fail("expected 'rays <r>'");
  const std::size_t r = in.count(rs[1]);
  for (std::size_t i = 0; i < r; ++i) v.rays.push_back(read_point(in, v.dim, "ray"));
  return v;
}

void write_incidence(std::ostream& os, const IncidenceMatrix& inc) {
  os << "polybound-inc 1\n";
  os << "facets " << inc.n_facets() << " vertices " << inc.n_vertices << '\n';
  for (const auto& f : inc.facets) {
    std::string line(inc.n_vertices, '0');
    for (auto v : f.to_indices()) line[v] = '1';
    os << line << '\n';
  }
  if (inc.far_face) {
    os << "farface";
    for (auto v : inc.far_face->to_indices()) os << ' ' << v;
    os << '\n';
  }
}

IncidenceMatrix read_incidence(std::istream& is) {
  LineReader in(is);
  in.expect(in.tokens("header"), {"polybound-inc", "1"});
  auto sizes = in.tokens("facets/vertices line");
  if (sizes.size() != 4) in.fail("expected 'facets <m> vertices <n>'");
  in.expect({sizes[0]}, {"facets"});
  in.expect({sizes[2]}, {"vertices"});
  IncidenceMatrix inc;
  const std::size_t m = in.count(sizes[1]);
  inc.n_vertices = in.count(sizes[3]);
  for (std::size_t f = 0; f < m; ++f) {
    auto toks = in.tokens("incidence row");
    if (toks.size() != 1 || toks[0].size() != inc.n_vertices) {
      in.fail("incidence row must have " + std::to_string(inc.n_vertices) + " characters");
    }
    VertexSet row(inc.n_vertices);
    for (std::size_t v = 0; v < inc.n_vertices; ++v) {
      const char c = toks[0][v];
      if (c == '1') row.insert(v);
      else if (c != '0') in.fail("incidence entries must be 0 or 1");
    }
    inc.facets.push_back(std::move(row));
  }
  if (auto far = in.maybe_tokens()) {
    in.expect(*far, {"farface"});
    VertexSet set(inc.n_vertices);
    for (std::size_t i = 1; i < far->size(); ++i) {
      const std::size_t v = in.count((*far)[i]);
      if (v >= inc.n_vertices) in.fail("far face index out of range");
      set.insert(v);
    }
    inc.far_face = std::move(set);
  }
  inc.validate();
  return inc;
}

std::string hasse_to_json(const HasseDiagram& hd) {
  const HasseDiagram c = hd.canonical();
  nlohmann::ordered_json j;
  j["n_vertices"] = c.n_vertices;
  j["far_face"] = c.far_face ? c.far_face->to_indices() : std::vector<std::size_t>{};
  auto faces = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    nlohmann::ordered_json f;
    f["id"] = i;
    f["rank"] = c.nodes[i].rank;
    f["vertices"] = c.nodes[i].vertices.to_indices();
    faces.push_back(std::move(f));
  }
  j["faces"] = std::move(faces);
  auto arcs = nlohmann::ordered_json::array();
  for (auto [lo, hi] : c.arcs) arcs.push_back({lo, hi});
  j["arcs"] = std::move(arcs);
  j["f_vector"] = c.f_vector();
  return j.dump() + "\n";
}

HasseDiagram hasse_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    HasseDiagram hd;
    hd.n_vertices = j.at("n_vertices").get<std::size_t>();
    auto members = [&](const nlohmann::json& list) {
      auto idx = list.get<std::vector<std::size_t>>();
      for (auto v : idx) {
        if (v >= hd.n_vertices) throw input_error("vertex index " + std::to_string(v) + " out of range");
      }
      return VertexSet::from_indices(hd.n_vertices, idx);
    };
    const auto& far = j.at("far_face");
    if (!far.empty()) hd.far_face = members(far);
    for (const auto& f : j.at("faces")) {
      if (f.at("id").get<std::size_t>() != hd.nodes.size()) throw input_error("face ids must be 0, 1, 2, ...");
      hd.nodes.push_back({members(f.at("vertices")), f.at("rank").get<int>()});
    }
    for (const auto& a : j.at("arcs")) {
      const auto lo = a.at(0).get<std::size_t>(), hi = a.at(1).get<std::size_t>();
      if (lo >= hd.nodes.size() || hi >= hd.nodes.size()) throw input_error("arc endpoint out of range");
      hd.arcs.emplace_back(lo, hi);
    }
    return hd;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid Hasse diagram JSON: ") + e.what());
  }
}

std::string fvector_to_json(const SimpleFaceNumbers& numbers) {
  nlohmann::ordered_json j;
  j["f_bounded"] = numbers.f_bounded.f;
  j["f_all"] = numbers.f_all.f;
  j["h"] = numbers.h.h;
  j["h_inf"] = numbers.h.h_inf;
  return j.dump() + "\n";
}

std::string format_fvector(const std::vector<std::uint64_t>& f) {
  std::string s = "f = (";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(f[i]);
  }
  return s + ")";
}

}  // namespace polybound
