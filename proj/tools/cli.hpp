#pragma once

// Command-line front end. run() never exits the process; it returns
//   0 success, 1 verification failure, 2 usage or parameter error,
//   3 resource guard tripped.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ppart/bijections.hpp"
#include "ppart/enumerate.hpp"
#include "ppart/errors.hpp"
#include "ppart/families.hpp"
#include "ppart/flips.hpp"
#include "ppart/serialize.hpp"
#include "ppart/verify.hpp"

namespace ppart::cli {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

struct Options {
  std::string family = "a";
  std::optional<int> N;
  std::optional<int> n;
  int k = 0;
  int d = 1;
  int m = 1;
  std::string engine = "formula";
  std::string scheme;
  std::uint64_t max_items = 10'000'000;
  int max_n = 64;
  std::string format = "summary";
  std::string suite = "all";
  int max_N = 10;
  int from = 0;
  std::string map;
  bool trees = false;
  bool proper = false;
  bool label_index = false;
};

/// Parses "cyclic:C", "adjusted3", "blocks:M" (ones first) or
/// "explicit:1,2,..." into a coloring of `num_vertices` vertices.
inline ColoredPolygon parse_scheme(const std::string& text, int num_vertices) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParameterError("bad number '" + s + "' in scheme " + text);
    }
  };
  if (kind == "cyclic") return make_coloring(scheme::Cyclic{number(arg)}, num_vertices);
  if (kind == "adjusted3") return make_coloring(scheme::CyclicAdjusted3{}, num_vertices);
  if (kind == "blocks") {
    const int ones = number(arg);
    return make_coloring(scheme::Blocks{ones, num_vertices - ones}, num_vertices);
  }
  if (kind == "explicit") {
    std::vector<Color> colors;
    std::size_t start = 0;
    while (start <= arg.size()) {
      const auto comma = arg.find(',', start);
      colors.push_back(number(arg.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return make_coloring(scheme::Explicit{colors}, num_vertices);
  }
  throw ParameterError("unknown scheme " + text);
}

namespace detail {

inline SequenceSpec make_spec(const Options& o) {
  const auto fam = parse_family(o.family);
  if (!fam) throw ParameterError("unknown family " + o.family);
  SequenceSpec spec{*fam, o.k, o.d, o.m};
  if (spec.family == Family::c_k && spec.k == 0) spec.k = 4;
  if ((spec.family == Family::catalan_k || spec.family == Family::catalan_kd) && spec.k == 0)
    spec.k = 2;
  return spec;
}

inline Engine make_engine(const Options& o) {
  const auto e = parse_engine(o.engine);
  if (!e) throw ParameterError("unknown engine " + o.engine);
  return *e;
}

inline int index_of(const Options& o) {
  if (o.N) return *o.N;
  if (o.n) return *o.n;
  throw ParameterError("an index is required (--N, or --n for d and the catalan families)");
}

// Polygon size of a family member, for the --max-n guard.
inline int vertices_of(const SequenceSpec& spec, int index) {
  switch (spec.family) {
    case Family::d_blocks: return spec.m + index;
    case Family::catalan_k: return index * (spec.k - 1) + 2;
    case Family::catalan_kd: return index * (spec.k - 1) + spec.d + 1;
    default: return index + 2;
  }
}

inline void guard_size(int vertices, const Options& o) {
  if (vertices > o.max_n)
    throw ResourceError("polygon with " + std::to_string(vertices) +
                        " vertices exceeds --max-n " + std::to_string(o.max_n));
}

inline ordered_json tree_json(const KAryTree& t) {
  ordered_json j;
  j["arity"] = t.arity();
  j["preorder"] = t.preorder();
  return j;
}

inline KAryTree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("preorder"))
    throw ParameterError("tree JSON needs \"arity\" and \"preorder\"");
  return KAryTree(j.at("arity").get<int>(), j.at("preorder").get<std::string>());
}

inline void emit(std::ostream& out, const Partition& p, const std::optional<ColoredPolygon>& poly) {
  out << (poly ? serialize(p, *poly) : serialize(p)) << '\n';
}

inline int do_count(const Options& o, std::ostream& out) {
  const auto spec = make_spec(o);
  const auto engine = make_engine(o);
  const int index = index_of(o);
  if (engine != Engine::formula) guard_size(vertices_of(spec, index), o);
  out << family_count(spec, index, engine, EnumerationLimits{o.max_items}).str() << '\n';
  return kOk;
}

inline int do_sequence(const Options& o, std::ostream& out) {
  const auto spec = make_spec(o);
  const auto engine = make_engine(o);
  const int to = index_of(o);
  if (o.from < 0 || o.from > to) throw ParameterError("need 0 <= --from <= index");
  // Family d starts at n = 1.
  const int from = spec.family == Family::d_blocks ? std::max(o.from, 1) : o.from;
  for (int i = from; i <= to; ++i) {
    if (engine != Engine::formula) guard_size(vertices_of(spec, i), o);
    out << i << '\t' << family_count(spec, i, engine, EnumerationLimits{o.max_items}).str()
        << '\n';
  }
  return kOk;
}

inline int do_enumerate(const Options& o, std::ostream& out) {
  const EnumerationLimits limits{o.max_items};
  if (o.trees) {
    if (!o.n) throw ParameterError("--trees needs --n (internal vertices)");
    for (auto&& t : enumerate_kary_trees(o.k == 0 ? 2 : o.k, *o.n, limits))
      out << tree_json(t).dump() << '\n';
    return kOk;
  }
  const auto spec = make_spec(o);
  const int index = index_of(o);
  const int v = vertices_of(spec, index);
  guard_size(v, o);
  if (spec.family == Family::catalan_k || spec.family == Family::catalan_kd) {
    const int D = spec.family == Family::catalan_k ? 2 : spec.d + 1;
    for (auto&& p : enumerate_kd_partitions(v, spec.k + 1, D, limits)) emit(out, p, std::nullopt);
    return kOk;
  }
  const auto inst = colored_instance(spec, index);
  if (spec.family == Family::b_prime) {
    for (auto&& p : enumerate_k_partitions(v, 3, limits))
      if (!has_monochromatic_region(p, inst.poly)) emit(out, p, inst.poly);
    return kOk;
  }
  for (auto&& p : enumerate_proper(inst.poly, inst.region, limits)) emit(out, p, inst.poly);
  return kOk;
}

// Default coloring of each colored map when the input carries none.
inline ColoredPolygon coloring_for(const std::string& map, const ParsedPartition& in,
                                   const Options& o) {
  const int v = in.partition.num_vertices();
  if (in.colors) {
    const int top = *std::max_element(in.colors->begin(), in.colors->end());
    return ColoredPolygon(*in.colors, top);
  }
  if (!o.scheme.empty()) return parse_scheme(o.scheme, v);
  if (map == "tri_to_quad" || map == "quad_to_tris" || map == "rooted_a" ||
      map == "rooted_fiber_a")
    return make_coloring(scheme::Cyclic{2}, v);
  if (map == "tri3_to_blocks" || map == "blocks_to_tri3")
    return make_coloring(scheme::Cyclic{3}, v);
  if (map == "rooted_b" || map == "rooted_fiber_b")
    return make_coloring(scheme::CyclicAdjusted3{}, v);
  return make_coloring(scheme::Cyclic{o.k}, v);
}

inline const std::vector<std::string>& map_names() {
  static const std::vector<std::string> names{
      "to_tree",  "from_tree",      "tri_to_quad",    "quad_to_tris",  "tri3_to_blocks",
      "blocks_to_tri3", "rooted_a", "rooted_b",       "rooted_fiber_a", "rooted_fiber_b",
      "to_superblocks", "from_superblocks"};
  return names;
}

inline int do_biject(const Options& o, std::istream& in, std::ostream& out) {
  const auto& names = map_names();
  if (std::find(names.begin(), names.end(), o.map) == names.end())
    throw ParameterError("unknown map " + o.map);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line);
    if (o.map == "from_tree") {
      const auto t = tree_from_json(j);
      emit(out, tree_to_partition(t, t.leaf_count() + 1), std::nullopt);
      continue;
    }
    const auto parsed = partition_from_json(j);
    const auto& p = parsed.partition;
    guard_size(p.num_vertices(), o);
    if (o.map == "to_tree") {
      if (o.k < 2) throw ParameterError("to_tree needs --k (tree arity)");
      out << tree_json(partition_to_tree(p, o.k)).dump() << '\n';
      continue;
    }
    if ((o.map == "to_superblocks" || o.map == "from_superblocks") && o.k < 4)
      throw ParameterError(o.map + " needs --k >= 4");
    const auto poly = coloring_for(o.map, parsed, o);
    if (o.map == "tri_to_quad") emit(out, proper_tri_to_quad(p, poly), poly);
    if (o.map == "quad_to_tris")
      for (const auto& q : quad_to_proper_tris(p, poly)) emit(out, q, poly);
    if (o.map == "tri3_to_blocks") emit(out, tri3_to_blocks(p, poly), poly);
    if (o.map == "blocks_to_tri3") emit(out, blocks_to_tri3(p, poly), poly);
    if (o.map == "rooted_a") emit(out, rooted_block_map(p, poly, SequenceSpec{Family::a}), poly);
    if (o.map == "rooted_b") emit(out, rooted_block_map(p, poly, SequenceSpec{Family::b}), poly);
    if (o.map == "rooted_fiber_a")
      for (const auto& q : rooted_block_fiber(p, poly, SequenceSpec{Family::a})) emit(out, q, poly);
    if (o.map == "rooted_fiber_b")
      for (const auto& q : rooted_block_fiber(p, poly, SequenceSpec{Family::b})) emit(out, q, poly);
    if (o.map == "to_superblocks") emit(out, kpartition_to_superblocks(p, poly, o.k), poly);
    if (o.map == "from_superblocks") emit(out, superblocks_to_kpartition(p, poly, o.k), poly);
  }
  return kOk;
}

inline int do_flipgraph(const Options& o, std::ostream& out) {
  if (o.format != "dot" && o.format != "summary")
    throw ParameterError("--format must be dot or summary");
  const EnumerationLimits limits{o.max_items};
  FlipGraph g;
  if (o.trees) {
    if (!o.n) throw ParameterError("--trees needs --n (internal vertices)");
    g = build_tree_flip_graph(enumerate_kary_trees(o.k == 0 ? 2 : o.k, *o.n, limits));
  } else {
    if (!o.n) throw ParameterError("flipgraph needs --n (polygon vertices)");
    if (o.k < 3) throw ParameterError("flipgraph needs --k >= 3 (region size)");
    guard_size(*o.n, o);
    std::optional<ColoredPolygon> poly;
    if (o.proper) poly = parse_scheme(o.scheme.empty() ? "cyclic:2" : o.scheme, *o.n);
    g = build_flip_graph(enumerate_k_partitions(*o.n, o.k, limits), o.k, poly);
  }
  out << (o.format == "dot" ? to_dot(g, o.label_index) : summary(g));
  return kOk;
}

inline int do_verify(const Options& o, std::ostream& out) {
  guard_size(o.max_N + 2, o);
  bool ok = true;
  for (const auto& r : run_verify(o.suite, o.max_N)) {
    out << (r.ok ? "PASS" : "FAIL") << '\t' << r.suite << '\t' << r.name;
    if (!r.ok) out << '\t' << r.detail;
    out << '\n';
    ok = ok && r.ok;
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace detail

/// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Options o;
  CLI::App app{"Counting, enumeration, bijections and flips for proper polygon partitions",
               "ppart"};
  app.require_subcommand(1);

  auto index_flags = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "a | b | c | d | catalan | catalan_kd | b_prime");
    sub->add_option("--N", o.N, "index (polygon has N+2 vertices for a, b, c, b_prime)");
    sub->add_option("--n", o.n, "index for d (count of 2s) and catalan families");
    sub->add_option("--k", o.k, "region size for c; arity for catalan families");
    sub->add_option("--d", o.d, "root parameter for catalan_kd");
    sub->add_option("--m", o.m, "count of leading 1s for d");
  };
  auto limit_flags = [&o](CLI::App* sub) {
    sub->add_option("--max-items", o.max_items, "refuse enumerations projected larger than this");
    sub->add_option("--max-n", o.max_n, "refuse polygons with more vertices than this");
  };

  auto* count = app.add_subcommand("count", "print one count");
  index_flags(count);
  limit_flags(count);
  count->add_option("--engine", o.engine, "formula | dp | brute");

  auto* sequence = app.add_subcommand("sequence", "print <index>\\t<value> lines");
  index_flags(sequence);
  limit_flags(sequence);
  sequence->add_option("--engine", o.engine, "formula | dp | brute");
  sequence->add_option("--from", o.from, "first index");

  auto* enumerate = app.add_subcommand("enumerate", "JSON lines of the objects a family counts");
  index_flags(enumerate);
  limit_flags(enumerate);
  enumerate->add_flag("--trees", o.trees, "k-ary trees with --n internal vertices instead");

  auto* biject = app.add_subcommand("biject", "apply a map to JSON partitions on stdin");
  limit_flags(biject);
  biject->add_option("--map", o.map, "to_tree | from_tree | tri_to_quad | quad_to_tris | "
                                     "tri3_to_blocks | blocks_to_tri3 | rooted_a | rooted_b | "
                                     "rooted_fiber_a | rooted_fiber_b | to_superblocks | "
                                     "from_superblocks")
      ->required();
  biject->add_option("--k", o.k, "tree arity, or k for the superblock maps");
  biject->add_option("--scheme", o.scheme, "coloring when the input has no \"colors\"");

  auto* flipgraph = app.add_subcommand("flipgraph", "flip graph as DOT or a component summary");
  limit_flags(flipgraph);
  flipgraph->add_option("--n", o.n, "polygon vertices (internal vertices with --trees)");
  flipgraph->add_option("--k", o.k, "region size (arity with --trees)");
  flipgraph->add_flag("--trees", o.trees, "k-ary tree flip graph");
  flipgraph->add_flag("--proper", o.proper, "keep proper partitions only");
  flipgraph->add_option("--scheme", o.scheme,
                        "cyclic:C | adjusted3 | blocks:M | explicit:1,2,... (default cyclic:2)");
  flipgraph->add_option("--format", o.format, "dot | summary");
  flipgraph->add_flag("--label-index", o.label_index, "label DOT nodes by index");

  auto* verify = app.add_subcommand("verify", "run the oracle-agreement suites");
  limit_flags(verify);
  verify->add_option("--suite", o.suite, "all | counts | recursions | bijections | flips");
  verify->add_option("--max-N", o.max_N, "largest N checked");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) return detail::do_count(o, out);
    if (sequence->parsed()) return detail::do_sequence(o, out);
    if (enumerate->parsed()) return detail::do_enumerate(o, out);
    if (biject->parsed()) return detail::do_biject(o, in, out);
    if (flipgraph->parsed()) return detail::do_flipgraph(o, out);
    if (verify->parsed()) return detail::do_verify(o, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ppart::cli
