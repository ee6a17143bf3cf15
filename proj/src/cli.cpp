#include "overring/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "overring/lattice.hpp"
#include "overring/numsg/relative_ideal.hpp"
#include "overring/numsg/report.hpp"
#include "overring/numsg/strong_ideals.hpp"
#include "overring/serialization.hpp"
#include "overring/tower.hpp"

namespace overring::cli {
namespace {

namespace ser = serialization;
using numsg::NumericalSemigroup;
using ser::Json;

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::nsg_report, "nsg-report"}, {Command::nsg_overrings, "nsg-overrings"},
    {Command::nsg_sd, "nsg-sd"},         {Command::nsg_phi, "nsg-phi"},
    {Command::tower_report, "tower-report"}, {Command::check_paper, "check-paper"},
};

bool is_nsg(Command c) {
  return c == Command::nsg_report || c == Command::nsg_overrings || c == Command::nsg_sd || c == Command::nsg_phi;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read descriptor file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ser::Subject load_subject(const RunConfig& c) {
  if (c.gens) return NumericalSemigroup::from_generators(parse_generator_list(*c.gens));
  if (c.file) return ser::parse_descriptor(read_file(*c.file));
  const auto d = tower::preset(*c.preset);
  if (const auto* t = std::get_if<tower::TowerDescriptor>(&d)) return *t;
  return std::get<tower::PullbackSquare>(d);
}

NumericalSemigroup load_semigroup(const RunConfig& c) {
  auto subject = load_subject(c);
  if (auto* s = std::get_if<NumericalSemigroup>(&subject)) return *s;
  // A tower preset or file whose base is a bare semigroup is accepted too.
  if (auto* t = std::get_if<tower::TowerDescriptor>(&subject)) {
    if (auto* s = std::get_if<NumericalSemigroup>(&t->base); s && t->valuation_dims.empty()) return *s;
  }
  throw std::invalid_argument(to_string(c.command) + " needs a numerical semigroup (use --gens)");
}

void text_report(std::ostream& out, const ClassificationReport& r) {
  out << "subject: " << r.subject << "\n"
      << "model: " << r.model << "\n"
      << "dim: " << r.dim << "\n"
      << "dim_v: " << r.dim_v << "\n"
      << "overring_count: " << r.overring_count << "\n"
      << "sd_count: " << r.sd_count << "\n"
      << "phi_surjective: " << r.phi_surjective << "\n"
      << "max_chain_length: " << r.max_chain_length << "\n"
      << "is_local: " << r.is_local << "\n"
      << "is_valuation: " << r.is_valuation << "\n"
      << "is_pvd: " << r.is_pvd << "\n"
      << "is_fo: " << r.is_fo << "\n"
      << "is_fc: " << r.is_fc << "\n"
      << "is_t_linkative: " << r.is_t_linkative << "\n"
      << "is_super_t_linkative: " << r.is_super_t_linkative << "\n"
      << "t_linked_under_all_overrings: " << r.t_linked_under_all_overrings << "\n"
      << "conductor_nonzero: " << (r.conductor_nonzero ? "true" : "false") << "\n";
  if (r.semigroup) {
    out << "gaps:";
    for (int g : r.semigroup->gaps) out << ' ' << g;
    out << "\nfrobenius: " << r.semigroup->frobenius << "\nconductor ideal: [" << r.semigroup->conductor_ideal_from
        << ", inf)\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  if (r.lattice) {
    if (r.lattice->is_explicit()) {
      out << "lattice:\n" << lattice::render_text(*r.lattice);
    } else {
      out << "lattice: not enumerated (" << r.lattice->opaque_reason() << ")\n";
    }
  }
}

void emit_report(std::ostream& out, Format f, const ClassificationReport& r) {
  if (f == Format::json) {
    out << ser::dump(ser::to_json(r)) << "\n";
  } else {
    text_report(out, r);
  }
}

void cmd_overrings(std::ostream& out, Format f, const NumericalSemigroup& s) {
  const auto over = numsg::oversemigroups(s);
  const auto lat = lattice::semigroup_lattice(s);
  if (f == Format::json) {
    Json list = Json::array();
    for (const auto& t : over) {
      const auto e = numsg::RelativeIdeal::of_semigroup(s, t);
      list.push_back(Json{{"label", t.label()},
                          {"generators", t.generators()},
                          {"gaps", t.gaps()},
                          {"divisorial", numsg::v_closure(e) == e}});
    }
    Json j{{"schema", ser::kReportSchema}, {"subject", s.label()}, {"oversemigroups", std::move(list)},
           {"lattice", ser::to_json(lat)}};
    out << ser::dump(j) << "\n";
    return;
  }
  out << over.size() << " oversemigroups of " << s.label() << " (plus the quotient field L)\n"
      << lattice::render_text(lat);
}

void cmd_sd(std::ostream& out, Format f, const NumericalSemigroup& s) {
  const auto pairs = numsg::phi(s);
  if (f == Format::json) {
    Json list = Json::array();
    for (const auto& p : pairs) list.push_back(ser::to_json(p.ideal));
    out << ser::dump(Json{{"schema", ser::kReportSchema}, {"subject", s.label()}, {"sd_count", pairs.size()},
                          {"sd_ideals", std::move(list)}})
        << "\n";
    return;
  }
  out << pairs.size() << " strongly divisorial ideals of " << s.label() << "\n";
  for (const auto& p : pairs) out << "  " << p.ideal.to_string() << "\n";
}

void cmd_phi(std::ostream& out, Format f, const NumericalSemigroup& s) {
  const auto lat = lattice::semigroup_lattice(s);
  const auto records = lattice::semigroup_sd_records(s, lat);
  const auto check = lattice::phi_check(lat, records);
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < lat.nodes().size(); ++i) {
    if (i == lat.top()) continue;
    bool hit = false;
    for (const auto& r : records) hit = hit || r.node == i;
    if (!hit) missing.push_back(lat.nodes()[i].label);
  }
  if (f == Format::json) {
    Json list = Json::array();
    for (const auto& r : records)
      list.push_back(Json{{"ideal", ser::to_json(std::get<numsg::RelativeIdeal>(r.ideal))},
                          {"overring", lat.nodes()[r.node].label}});
    out << ser::dump(Json{{"schema", ser::kReportSchema},
                          {"subject", s.label()},
                          {"pairs", std::move(list)},
                          {"injective", check.injective},
                          {"surjective", check.surjective},
                          {"missing", missing}})
        << "\n";
    return;
  }
  for (const auto& r : records) out << "  " << lattice::describe(r) << " -> " << lat.nodes()[r.node].label << "\n";
  out << "injective: " << (check.injective ? "true" : "false") << "\n"
      << "surjective: " << (check.surjective ? "true" : "false") << "\n";
  for (const auto& m : missing) out << "not in image: " << m << "\n";
}

void cmd_tower(std::ostream& out, Format f, const ser::Subject& subject) {
  if (const auto* p = std::get_if<tower::PullbackSquare>(&subject)) {
    const bool linked = tower::t_linked_under(*p);
    if (f == Format::json) {
      out << ser::dump(Json{{"schema", ser::kReportSchema},
                            {"subject", p->name},
                            {"model", "pullback"},
                            {"base_is_field", p->base_is_field},
                            {"top", tower::to_string(p->top)},
                            {"t_linked_under", linked}})
          << "\n";
    } else {
      out << "subject: " << p->name << "\nmodel: pullback\nbase_is_field: " << (p->base_is_field ? "true" : "false")
          << "\ntop: " << tower::to_string(p->top) << "\nt_linked_under: " << (linked ? "true" : "false") << "\n";
    }
    return;
  }
  tower::TowerDescriptor d;
  if (const auto* s = std::get_if<NumericalSemigroup>(&subject)) {
    d = tower::TowerDescriptor{*s, {}, s->label()};
  } else {
    d = std::get<tower::TowerDescriptor>(subject);
  }
  if (d.name.empty()) d.name = tower::describe(d);
  emit_report(out, f, tower::classify(d));
}

int emit_checks(std::ostream& out, Format f, const std::vector<CheckResult>& rows) {
  int failed = 0;
  for (const auto& r : rows) failed += r.passed() ? 0 : 1;
  if (f == Format::json) {
    Json list = Json::array();
    for (const auto& r : rows)
      list.push_back(Json{{"criterion", r.criterion},
                          {"check_id", r.check_id},
                          {"description", r.description},
                          {"expected", r.expected},
                          {"actual", r.actual},
                          {"status", r.passed() ? "pass" : "fail"},
                          {"source", r.source}});
    out << ser::dump(Json{{"checks", std::move(list)},
                          {"passed", rows.size() - static_cast<std::size_t>(failed)},
                          {"failed", failed}})
        << "\n";
  } else {
    for (const auto& r : rows) {
      out << (r.passed() ? "PASS" : "FAIL") << "  ";
      if (r.criterion > 0) out << "[" << r.criterion << "] ";
      out << r.check_id << ": expected "
          << r.expected << ", actual " << r.actual << " (" << r.source << ")\n";
    }
    out << rows.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  }
  return failed ? 1 : 0;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.command == Command::check_paper) return emit_checks(out, c.format, check_paper(c.f_max));

  std::optional<NumericalSemigroup> oracle_subject;
  if (is_nsg(c.command)) {
    const auto s = load_semigroup(c);
    oracle_subject = s;
    switch (c.command) {
      case Command::nsg_report:
        emit_report(out, c.format, numsg::nsg_report(s));
        break;
      case Command::nsg_overrings:
        cmd_overrings(out, c.format, s);
        break;
      case Command::nsg_sd:
        cmd_sd(out, c.format, s);
        break;
      default:
        cmd_phi(out, c.format, s);
        break;
    }
  } else {
    const auto subject = load_subject(c);
    if (const auto* s = std::get_if<NumericalSemigroup>(&subject)) oracle_subject = *s;
    if (const auto* t = std::get_if<tower::TowerDescriptor>(&subject)) {
      const auto* s = std::get_if<NumericalSemigroup>(&t->base);
      if (s && t->valuation_dims.empty()) oracle_subject = *s;
    }
    cmd_tower(out, c.format, subject);
  }

  if (!c.oracle) return 0;
  if (!oracle_subject) throw std::invalid_argument("--oracle needs a numerical semigroup subject");
  return emit_checks(out, c.format, oracle_checks(oracle_subject->generators()));
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return std::string(name);
  return "?";
}

std::optional<Command> parse_command(std::string_view s) {
  for (const auto& [cmd, name] : kCommands)
    if (name == s) return cmd;
  return std::nullopt;
}

void RunConfig::validate() const {
  const int sources = (gens ? 1 : 0) + (preset ? 1 : 0) + (file ? 1 : 0);
  if (command == Command::check_paper) {
    if (sources != 0) throw std::invalid_argument("check-paper takes no input source");
  } else if (sources != 1) {
    throw std::invalid_argument("exactly one of --gens, --preset, --file is required");
  }
  if (f_max < 3 || f_max > kMaxFMax)
    throw std::invalid_argument("--f-max must lie in [3, " + std::to_string(kMaxFMax) + "]");
}

std::vector<int> parse_generator_list(std::string_view s) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',' || s[i] == ' ') {
      ++i;
      continue;
    }
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc{} || end == s.data() + i)
      throw std::invalid_argument("generators must be a comma-separated list of integers, got \"" + std::string(s) +
                                  "\"");
    out.push_back(v);
    i = static_cast<std::size_t>(end - s.data());
  }
  if (out.empty()) throw std::invalid_argument("generator list is empty");
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    return dispatch(config, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace overring::cli
