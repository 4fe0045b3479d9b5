#include "nilgood/io.hpp"

#include <fstream>
#include <sstream>

#include "nilgood/expr_analysis.hpp"

namespace nilgood {

GroupPtr load_group_table(std::istream& in) {
  long long order;
  if (!(in >> order)) throw std::invalid_argument("table file: missing order");
  if (order < 1 || order > FiniteGroup::kMaxOrder)
    throw limit_error("table file: order out of range");
  std::vector<int> table;
  table.reserve((size_t)order * order);
  for (long long i = 0; i < order * order; ++i) {
    long long v;
    if (!(in >> v)) throw std::invalid_argument("table file: too few entries");
    table.push_back((int)v);
  }
  return build_group(GroupSpec::explicit_table(std::move(table)));
}

GroupPtr load_group_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file: " + path);
  return load_group_table(in);
}

GroupPtr group_from_source(const std::string& source) {
  if (!source.empty() && source[0] == '@') return load_group_table_file(source.substr(1));
  return realize_finite(parse_group_expr(source));
}

FiniteAction load_action_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open action file: " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const std::exception& ex) {
    throw std::invalid_argument("action file is not valid JSON: " + std::string(ex.what()));
  }
  if (!doc.contains("actor") || !doc.contains("target") || !doc.contains("generators") ||
      !doc.contains("images"))
    throw std::invalid_argument(
        "action file requires fields: actor, target, generators, images");
  GroupPtr actor = group_from_source(doc["actor"].get<std::string>());
  GroupPtr target = group_from_source(doc["target"].get<std::string>());
  std::vector<int> generators = doc["generators"].get<std::vector<int>>();
  std::vector<Perm> images;
  for (const auto& img : doc["images"]) images.push_back(img.get<Perm>());
  return action_from_generator_images(std::move(actor), std::move(target),
                                      generators, images);
}

IntegerRepresentation load_representation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open representation file: " + path);
  long long rank, count;
  if (!(in >> rank >> count))
    throw std::invalid_argument("representation file: missing rank or generator count");
  if (rank < 1 || rank > 64)
    throw std::invalid_argument("representation file: rank out of range");
  if (count < 0 || count > 64)
    throw std::invalid_argument("representation file: generator count out of range");
  std::vector<IntMat> gens;
  for (long long g = 0; g < count; ++g) {
    IntMat M((size_t)rank, std::vector<long long>((size_t)rank));
    for (long long i = 0; i < rank; ++i)
      for (long long j = 0; j < rank; ++j)
        if (!(in >> M[i][j]))
          throw std::invalid_argument("representation file: too few matrix entries");
    gens.push_back(std::move(M));
  }
  return make_representation((int)rank, std::move(gens));
}

RingDescriptor parse_ring_flag(const std::string& flag) {
  if (flag == "Z") return RingDescriptor::integers();
  auto colon = flag.find(':');
  std::string head = flag.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : flag.substr(colon + 1);
  auto parse_num = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("ring flag: expected a number, got '" + s + "'");
    return std::stoll(s);
  };
  if (head == "p") {
    long long p = parse_num(rest);
    if (!is_prime((int)p)) throw std::invalid_argument("ring flag: p must be prime");
    return RingDescriptor::field((int)p);
  }
  if (head == "Zmod") return RingDescriptor::z_mod(parse_num(rest));
  if (head == "Zinv") {
    std::vector<int> primes;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) primes.push_back((int)parse_num(item));
    if (primes.empty()) throw std::invalid_argument("ring flag: Zinv needs primes");
    return RingDescriptor::z_invert(std::move(primes));
  }
  throw std::invalid_argument("unrecognized ring flag '" + flag +
                              "' (use p:<prime>, Z, Zinv:2,3 or Zmod:<n>)");
}

ordered_json ring_json(const RingDescriptor& ring) {
  ordered_json j;
  switch (ring.kind) {
    case RingDescriptor::Kind::FieldP:
      j["kind"] = "field_p";
      j["p"] = ring.p;
      break;
    case RingDescriptor::Kind::Integers:
      j["kind"] = "integers";
      break;
    case RingDescriptor::Kind::ZInvertJ:
      j["kind"] = "z_invert";
      j["primes"] = ring.primes;
      j["complement"] = ring.complement;
      break;
    case RingDescriptor::Kind::ZModN:
      j["kind"] = "z_mod";
      j["n"] = ring.n;
      break;
  }
  return j;
}

ordered_json judgment_json(const Judgment& judgment) {
  ordered_json j;
  j["verdict"] = verdict_str(judgment.verdict);
  j["ring"] = ring_json(judgment.ring);
  j["trace"] = ordered_json::array();
  for (const auto& t : judgment.trace)
    j["trace"].push_back({{"rule", t.rule}, {"citation", t.citation}, {"at", t.at}});
  j["notes"] = judgment.notes;
  return j;
}

ordered_json graded_json(const GradedModule& m) {
  ordered_json j;
  j["ring"] = m.ring.str();
  j["max_degree"] = m.max_degree();
  j["entries"] = ordered_json::array();
  for (int d = 0; d <= m.max_degree(); ++d) {
    const FGAbelian& e = m.entries[d];
    ordered_json entry;
    entry["degree"] = d;
    if (m.ring.field) {
      entry["dimension"] = e.free_rank;
    } else {
      entry["free_rank"] = e.free_rank;
      entry["torsion"] = e.torsion;
      entry["pretty"] = e.str();
    }
    j["entries"].push_back(std::move(entry));
  }
  return j;
}

ordered_json series_json(const SeriesChain& chain) {
  ordered_json j;
  j["orders"] = ordered_json::array();
  for (const auto& term : chain.terms) j["orders"].push_back(term.order());
  j["stabilized"] = chain.stabilized;
  return j;
}

ordered_json decision_json(const NilpotencyDecision& d) {
  ordered_json j;
  j["nilpotent"] = d.nilpotent;
  if (d.witness) j["witness"] = series_json(*d.witness);
  if (d.obstruction) {
    j["obstruction"] = ordered_json();
    j["obstruction"]["order"] = d.obstruction->order();
    std::vector<std::string> names;
    for (int x : d.obstruction->elements) names.push_back(d.obstruction->parent->name(x));
    j["obstruction"]["elements"] = names;
  }
  return j;
}

ordered_json subspace_chain_json(const SubspaceChain& chain) {
  ordered_json j;
  j["dims"] = chain.dims;
  j["stabilized_at"] = chain.stabilized_at;
  return j;
}

ordered_json sweep_json(const SweepReport& report) {
  ordered_json j;
  j["rank"] = report.spec.rank;
  j["max_abs_entry"] = report.spec.max_abs_entry;
  j["max_order"] = report.spec.max_order;
  j["candidates"] = report.candidates;
  j["representations"] = report.representations;
  j["nilpotent"] = report.nilpotent;
  j["identity"] = report.identity_count;
  j["counterexamples"] = ordered_json::array();
  for (const auto& M : report.counterexamples) j["counterexamples"].push_back(M);
  return j;
}

}  // namespace nilgood
