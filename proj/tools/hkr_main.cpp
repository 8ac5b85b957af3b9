// hkr: enumerate subgroups / sums / tuple classes, apply power operations,
// run the verification suites.
//
// Exit codes: 0 ok, 1 verify failure, 2 bad input, 3 size cap, 4 level
// mismatch, 5 section out of range.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hkr/bijections.hpp"
#include "hkr/errors.hpp"
#include "hkr/power_ops.hpp"
#include "hkr/serialize.hpp"
#include "hkr/verify.hpp"

namespace {

using namespace hkr;

struct Options {
  std::uint64_t p = 2;
  std::size_t n = 2;
  unsigned level = 2;
  bool level_given = false;
  std::uint32_t m = 2;
  bool m_given = false;
  bool section_given = false;
  unsigned k = 1;
  std::string group = "e";
  std::string section = "canonical";
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  bool total = false;
  std::string input;
  std::string generator;
  std::optional<unsigned> bound;
  std::string kind;
  std::string suite = "all";
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + o.out);
  f << text;
}

void check_prime(std::uint64_t p) {
  if (p < 2) throw InvalidArgument("p must be a prime");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidArgument(std::to_string(p) + " is not prime");
}

std::string csv_cell(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string hnf_cell(const TorsionSubgroup& h) {
  const auto& b = h.annihilator().matrix();
  std::string s;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (r) s += ";";
    for (std::size_t c = 0; c < b.cols(); ++c) s += (c ? " " : "") + b(r, c).get_str();
  }
  return s;
}

std::string tuple_cell(const Tuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s;
}

int cmd_enumerate(const Options& o) {
  check_prime(o.p);
  const Integer p(static_cast<unsigned long>(o.p));
  Json doc;
  doc["kind"] = o.kind;
  doc["p"] = o.p;
  doc["n"] = o.n;
  Json items = Json::array();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  if (o.kind == "subgroups") {
    doc["k"] = o.k;
    header = {"index", "order", "annihilator_hnf"};
    auto subs = enumerate_subgroups(p, o.n, o.k);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      items.push_back(subgroup_to_json(subs[i]));
      rows.push_back({std::to_string(i), subs[i].order().get_str(), hnf_cell(subs[i])});
    }
  } else if (o.kind == "sums") {
    doc["m"] = o.m;
    header = {"index", "total", "summands"};
    auto sums = enumerate_sums(p, o.n, o.m);
    for (std::size_t i = 0; i < sums.size(); ++i) {
      items.push_back(sum_to_json(sums[i]));
      std::string parts;
      for (const auto& h : sums[i].summands()) parts += (parts.empty() ? "" : " + ") + ("[" + hnf_cell(h) + "]");
      rows.push_back({std::to_string(i), std::to_string(sums[i].total()), parts});
    }
  } else if (o.kind == "hom-classes") {
    auto g = build_group(o.group);
    doc["group"] = g->name();
    header = {"index", "rep", "size"};
    auto cls = enumerate_hom_classes(g, o.n, o.p);
    for (std::size_t i = 0; i < cls->size(); ++i) {
      Json item;
      item["rep"] = (*cls)[i].rep;
      item["size"] = cls->class_size(i);
      items.push_back(std::move(item));
      rows.push_back({std::to_string(i), tuple_cell((*cls)[i].rep), std::to_string(cls->class_size(i))});
    }
  } else if (o.kind == "wreath-classes") {
    auto g = build_group(o.group);
    auto w = wreath_product(g, o.m);
    doc["group"] = w->name();
    header = {"index", "rep", "decorated_sum"};
    auto base = enumerate_hom_classes(g, o.n, o.p);
    auto cls = enumerate_hom_classes(w, o.n, o.p);
    for (std::size_t i = 0; i < cls->size(); ++i) {
      auto dec = wreath_class_to_decorated(*cls, *base, (*cls)[i]);
      Json item;
      item["rep"] = (*cls)[i].rep;
      item["decorated_sum"] = decorated_to_json(dec);
      items.push_back(std::move(item));
      std::string parts;
      for (const auto& d : dec.summands())
        parts += (parts.empty() ? "" : " + ") + ("[" + hnf_cell(d.subgroup) + "|" + tuple_cell(d.decoration.rep) + "]");
      rows.push_back({std::to_string(i), tuple_cell((*cls)[i].rep), parts});
    }
  } else {
    throw InvalidArgument("unknown listing '" + o.kind + "'");
  }

  doc["count"] = items.size();
  if (o.format == "csv") {
    std::ostringstream os;
    os << "count," << items.size() << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
      os << "\n";
    }
    emit(o, os.str());
  } else {
    doc["items"] = std::move(items);
    emit(o, dump(doc));
  }
  return 0;
}

int cmd_powerop(const Options& o) {
  if (o.format != "json") throw InvalidArgument("class functions are written as JSON only");
  if (o.input.empty() == o.generator.empty()) throw InvalidArgument("give exactly one of --input or --generator");
  check_prime(o.p);

  std::optional<ClassFunction> f;
  if (!o.input.empty()) {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw ParseError("cannot read " + o.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    f = class_function_from_json(j);
    const auto& sp = *f->space();
    if (sp.p() != o.p || sp.n() != o.n || (o.level_given && sp.level() != o.level))
      throw LevelMismatch("input has (p,n,N) = (" + std::to_string(sp.p()) + "," + std::to_string(sp.n()) + "," +
                          std::to_string(sp.level()) + "), flags ask for (" + std::to_string(o.p) + "," +
                          std::to_string(o.n) + "," + std::to_string(o.level) + ")");
  } else {
    auto g = build_group(o.group);
    auto classes = enumerate_hom_classes(g, o.n, o.p);
    auto space = C0Space::make(o.p, o.n, o.level);
    std::string name = o.generator == "random" ? "random:" + std::to_string(o.seed) : o.generator;
    f = generate_class_function(name, classes, space);
  }

  const unsigned bound = o.bound.value_or(kernel_bound_for(o.p, o.m));
  Section phi = parse_section(o.section, Integer(static_cast<unsigned long>(o.p)), o.n, bound);
  ClassFunction result = o.total ? total_power_op(*f, o.m, phi) : power_op(*f, o.m, phi);
  Json doc = to_json(result, result.group()->name());
  doc["operation"] = o.total ? "total_power_op" : "power_op";
  doc["m"] = o.m;
  doc["section"] = phi.provenance();
  emit(o, dump(doc));
  return 0;
}

int cmd_verify(const Options& o) {
  check_prime(o.p);
  VerifyConfig cfg;
  cfg.p = o.p;
  cfg.n = o.n;
  cfg.level = o.level;
  if (o.m_given) cfg.max_m = o.m;
  cfg.seed = o.seed;
  cfg.section = o.section_given ? o.section : "seeded:" + std::to_string(o.seed);
  parse_section(cfg.section, Integer(static_cast<unsigned long>(o.p)), o.n, 0);  // validate early
  auto results = run_verify(o.suite, cfg);
  emit(o, format_report(results));
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"hkr: subgroup sums, class functions and power operations"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime p")->capture_default_str();
    sub->add_option("--n", o.n, "height n (rank of the lattice)")->capture_default_str()->check(CLI::Range(1, 4));
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "output path (default stdout)");
  };

  auto* en = app.add_subcommand("enumerate", "canonical listings");
  en->add_option("kind", o.kind, "subgroups | sums | hom-classes | wreath-classes")
      ->required()
      ->check(CLI::IsMember({"subgroups", "sums", "hom-classes", "wreath-classes"}));
  common(en);
  en->add_option("--k", o.k, "subgroup order exponent")->capture_default_str();
  en->add_option("--m", o.m, "sum total / wreath degree")->capture_default_str()->check(CLI::Range(1, 12));
  en->add_option("--group", o.group, "group spec, e.g. S3, C2xC2, wr(C2,2)")->capture_default_str();

  auto* po = app.add_subcommand("powerop", "apply P_m or (with --total) the total power operation");
  common(po);
  po->add_option("--level", o.level, "level N")->capture_default_str()->check(CLI::Range(1, 8));
  po->add_option("--m", o.m, "m")->capture_default_str()->check(CLI::Range(1, 8));
  po->add_option("--group", o.group, "group spec")->capture_default_str();
  po->add_option("--section", o.section, "canonical | seeded:<u64>")->capture_default_str();
  po->add_option("--bound", o.bound, "largest subgroup order exponent covered by the section");
  po->add_option("--seed", o.seed, "seed for --generator random")->capture_default_str();
  po->add_flag("--total", o.total, "total power operation on G wr S_m");
  auto* in_opt = po->add_option("--input", o.input, "class function JSON");
  po->add_option("--generator", o.generator, "one | coordinate | random | random:<seed>")->excludes(in_opt);

  auto* ve = app.add_subcommand("verify", "run property suites");
  ve->add_option("suite", o.suite, "all | bijections | transfers | powerops | invariance | stabilizer | fgl")
      ->check(CLI::IsMember({"all", "bijections", "transfers", "powerops", "invariance", "stabilizer", "fgl"}));
  common(ve);
  ve->add_option("--level", o.level, "level N")->capture_default_str()->check(CLI::Range(1, 8));
  ve->add_option("--m", o.m, "largest m")->check(CLI::Range(1, 8));
  ve->add_option("--section", o.section, "section compared with the canonical one (default seeded:<seed>)");
  ve->add_option("--seed", o.seed, "seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  o.level_given = po->count("--level") + ve->count("--level") > 0;
  o.m_given = ve->count("--m") > 0;
  o.section_given = ve->count("--section") > 0;

  try {
    if (en->parsed()) return cmd_enumerate(o);
    if (po->parsed()) return cmd_powerop(o);
    return cmd_verify(o);
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const LevelMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const SectionOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
