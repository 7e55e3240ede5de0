#include "commands.hpp"

#include "cache.hpp"
#include "singulocus/ideal_calculus.hpp"
#include "singulocus/module_calculus.hpp"
#include "singulocus/poly_parse.hpp"
#include "singulocus/singular_locus.hpp"
#include "singulocus/tjurina.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace singulocus::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Undetermined {};

struct Output {
  std::string op;
  std::vector<std::string> inputs;
  std::string label;
  std::vector<std::string> generators;
  std::string separator = ", ";
  std::optional<std::string> value;
  std::vector<std::pair<std::string, std::string>> extra;
  int exit = kOk;
};

std::vector<std::string> ideal_strings(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.canonical_gens()) out.push_back(g.to_string());
  return out;
}

std::string joined(const std::vector<std::string>& gens, const std::string& sep) {
  if (gens.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? sep : "") + gens[i];
  return s;
}

std::string ring_key(const RingPtr& r, const std::string& order) {
  std::string s = "QQ[";
  for (std::size_t i = 0; i < r->nvars(); ++i) s += (i ? "," : "") + r->var_names()[i];
  s += "] " + order;
  for (const auto& q : r->quotient()) s += " /" + q.to_string();
  return s;
}

// Positional arguments and flags of one command line.
struct Args {
  std::string op;
  std::vector<std::string> pos;
  std::vector<std::size_t> pos_offsets;
  std::map<std::string, std::string> flags;
  std::string text;

  // Text from the start of positional argument `i` to the end.
  std::string rest(std::size_t i) const {
    if (i >= pos.size()) throw UsageError(op + ": missing polynomial argument");
    return text.substr(pos_offsets[i]);
  }
};

const std::set<std::string> kValueFlags = {"--group", "--shape"};

Args split_command(const std::string& text) {
  Args a;
  a.text = text;
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string tok = text.substr(start, i - start);
    if (first) {
      a.op = tok;
      first = false;
    } else if (tok.rfind("--", 0) == 0) {
      auto eq = tok.find('=');
      if (eq != std::string::npos) {
        a.flags[tok.substr(0, eq)] = tok.substr(eq + 1);
      } else if (kValueFlags.count(tok)) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t vs = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (vs == i) throw UsageError(tok + " needs a value");
        a.flags[tok] = text.substr(vs, i - vs);
      } else {
        a.flags[tok] = "";
      }
    } else {
      a.pos.push_back(tok);
      a.pos_offsets.push_back(start);
    }
  }
  if (a.op.empty()) throw UsageError("empty command");
  return a;
}

class Dispatcher {
 public:
  Dispatcher(const Session& s, const RunOptions& opts, std::ostream& err)
      : s_(s), cache_(opts.cache_dir, &err) {}

  Output run(const Args& a) {
    a_ = &a;
    Output o;
    o.op = a.op;
    o.label = "ideal";
    const std::string& op = a.op;
    if (op == "gb") {
      arity(1);
      const auto& d = ideal_arg(0, o);
      o.label = "basis";
      o.generators = cached(d, "gb", [&] {
        std::vector<std::string> out;
        for (const auto& g : d.ideal.standard_basis()) out.push_back(g.to_string());
        return out;
      });
    } else if (op == "nf") {
      const auto& d = ideal_arg(0, o);
      Poly f = poly_arg(d.ideal.ring(), 1, o);
      o.label = "poly";
      o.generators = {normal_form(d.ideal, f).to_string()};
    } else if (op == "member") {
      const auto& d = ideal_arg(0, o);
      Poly f = poly_arg(d.ideal.ring(), 1, o);
      o.label = "member";
      o.value = d.ideal.contains(f) ? "true" : "false";
    } else if (op == "radmember") {
      const auto& d = ideal_arg(0, o);
      Poly f = poly_arg(d.ideal.ring(), 1, o);
      o.label = "radmember";
      Truth t = radical_member(f, d.ideal);
      o.value = to_string(t);
      if (t == Truth::Undetermined) o.exit = kUndetermined;
    } else if (op == "sum" || op == "intersect" || op == "quot" || op == "sat") {
      arity(2);
      const auto& i = ideal_arg(0, o);
      const auto& j = ideal_arg(1, o);
      if (i.ring != j.ring) throw UsageError(op + ": ideals live in different rings");
      o.generators = cached2(i, j, op, [&] {
        if (op == "sum") return ideal_sum(i.ideal, j.ideal);
        if (op == "intersect") return ideal_intersect(i.ideal, j.ideal);
        if (op == "quot") return ideal_quotient(i.ideal, j.ideal);
        return saturation(i.ideal, j.ideal);
      });
    } else if (op == "eliminate") {
      if (a.pos.size() < 2) throw UsageError("eliminate: expected an ideal and variables");
      const auto& d = ideal_arg(0, o);
      std::vector<std::size_t> vars;
      std::string names;
      const auto& vn = d.ideal.ring()->var_names();
      for (std::size_t k = 1; k < a.pos.size(); ++k) {
        auto it = std::find(vn.begin(), vn.end(), a.pos[k]);
        if (it == vn.end()) throw UsageError("eliminate: unknown variable '" + a.pos[k] + "'");
        vars.push_back(static_cast<std::size_t>(it - vn.begin()));
        names += " " + a.pos[k];
        o.inputs.push_back(a.pos[k]);
      }
      o.generators = cached(d, "eliminate" + names, [&] { return ideal_strings(eliminate(d.ideal, vars)); });
    } else if (op == "detideal" || op == "anncokerj") {
      arity(2);
      const auto& m = matrix_arg(0, o);
      long j = int_arg(1, o);
      o.generators = cached(m, op + " " + std::to_string(j), [&] {
        if (op == "detideal") {
          if (j < 0) throw UsageError("detideal: j must be nonnegative");
          return ideal_strings(det_ideal(m.matrix, static_cast<std::size_t>(j)));
        }
        return ideal_strings(ann_coker_j(m.matrix, j));
      });
    } else if (op == "anncoker") {
      arity(1);
      const auto& m = matrix_arg(0, o);
      o.generators = cached(m, op, [&] { return ideal_strings(ann_coker(m.matrix)); });
    } else if (op == "pfaffian") {
      if (a.pos.size() == 1) {
        const auto& m = matrix_arg(0, o);
        o.label = "poly";
        o.generators = {pfaffian(m.matrix).to_string()};
      } else {
        arity(2);
        const auto& m = matrix_arg(0, o);
        long j = int_arg(1, o);
        o.generators = cached(m, op + " " + std::to_string(j),
                              [&] { return ideal_strings(pfaffian_ideal(m.matrix, j)); });
      }
    } else if (op == "der") {
      arity(1);
      const Declaration* d = s_.find(a.pos[0]);
      if (!d) throw UsageError("unknown name '" + a.pos[0] + "'");
      RingPtr ring;
      if (const auto* r = std::get_if<RingDecl>(&d->value)) ring = r->ring;
      if (const auto* i = std::get_if<IdealDecl>(&d->value)) ring = i->ideal.ring();
      if (const auto* m = std::get_if<MatrixDecl>(&d->value)) ring = m->matrix.ring();
      o.inputs.push_back(d->to_string());
      bool m_variant = flag("--m-variant");
      if (flag("--full-der") && m_variant) throw UsageError("der: --m-variant and --full-der exclude each other");
      DerBasis b = m_variant ? der_module_m(ring) : der_module(ring);
      o.label = "derivations";
      o.separator = "; ";
      for (const auto& g : b.gens) o.generators.push_back(to_string(g, ring));
    } else if (op == "singlocus") {
      arity(2);
      const auto& d = ideal_arg(0, o);
      long r = int_arg(1, o);
      bool m_variant = flag("--m-variant");
      if (flag("--full-der") && m_variant) throw UsageError("singlocus: --m-variant and --full-der exclude each other");
      auto variant = m_variant ? DerBasis::Variant::IntoMaximal : DerBasis::Variant::Full;
      o.generators = cached(d, op + " " + std::to_string(r) + (m_variant ? " m" : " full"),
                            [&] { return ideal_strings(sing_locus(d.ideal, r, variant)); });
    } else if (op == "fittomega") {
      arity(2);
      const auto& d = ideal_arg(0, o);
      long k = int_arg(1, o);
      o.generators = cached(d, op + " " + std::to_string(k), [&] { return ideal_strings(fitt_omega(d.ideal, k)); });
    } else if (op == "t1") {
      arity(1);
      const auto& m = matrix_arg(0, o);
      GroupAction action = group_action();
      o.inputs.push_back("group " + to_string(action.group));
      o.inputs.push_back("shape " + to_string(action.shape));
      bool bounds = flag("--bounds"), radical = flag("--radical-check");
      if (!bounds && !radical) {
        o.generators = cached(m, "t1 " + to_string(action.group) + " " + to_string(action.shape),
                              [&] { return ideal_strings(t1_annihilator(m.matrix, action)); });
      } else {
        T1Report rep = t1_report(m.matrix, action, bounds, radical);
        o.generators = ideal_strings(rep.annihilator);
        if (rep.bounds) {
          o.extra.emplace_back("lower", joined(ideal_strings(rep.bounds->lower), ", "));
          o.extra.emplace_back("upper", joined(ideal_strings(rep.bounds->upper), ", "));
          o.extra.emplace_back("lower-in-ann", rep.lower_in_ann ? "true" : "false");
          o.extra.emplace_back("ann-in-upper", rep.ann_in_upper ? "true" : "false");
        }
        if (rep.radical) {
          Truth t = rep.radical->equal();
          o.extra.emplace_back("radical-check", to_string(t));
          if (t == Truth::Undetermined) o.exit = kUndetermined;
        }
      }
    } else {
      throw UsageError("unknown command '" + op + "'");
    }
    for (const auto& [name, value] : a.flags)
      if (!used_flags_.count(name)) throw UsageError(op + ": unknown option '" + name + "'");
    return o;
  }

 private:
  void arity(std::size_t n) const {
    if (a_->pos.size() != n)
      throw UsageError(a_->op + ": expected " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }

  bool flag(const std::string& name) {
    used_flags_.insert(name);
    auto it = a_->flags.find(name);
    if (it == a_->flags.end()) return false;
    if (!it->second.empty()) throw UsageError(name + " takes no value");
    return true;
  }

  std::string flag_value(const std::string& name, const std::string& fallback) {
    used_flags_.insert(name);
    auto it = a_->flags.find(name);
    return it == a_->flags.end() ? fallback : it->second;
  }

  GroupAction group_action() {
    static const std::map<std::string, Group> groups = {
        {"glr", Group::Glr}, {"aut", Group::Aut}, {"cglr", Group::cGlr}, {"congr", Group::cGcongr}};
    static const std::map<std::string, Shape> shapes = {
        {"full", Shape::Full}, {"sym", Shape::Symmetric}, {"skew", Shape::Skew}};
    std::string g = flag_value("--group", "cglr"), sh = flag_value("--shape", "full");
    if (!groups.count(g)) throw UsageError("t1: unknown group '" + g + "' (glr, aut, cglr, congr)");
    if (!shapes.count(sh)) throw UsageError("t1: unknown shape '" + sh + "' (full, sym, skew)");
    return {groups.at(g), shapes.at(sh)};
  }

  const Declaration& named(std::size_t i, const char* kind) const {
    if (i >= a_->pos.size()) throw UsageError(a_->op + ": missing " + kind + " argument");
    const Declaration* d = s_.find(a_->pos[i]);
    if (!d) throw UsageError("unknown name '" + a_->pos[i] + "'");
    if (std::string(d->kind()) != kind) throw UsageError("'" + a_->pos[i] + "' is not " + (kind[0] == 'i' ? "an " : "a ") + kind);
    return *d;
  }

  const IdealDecl& ideal_arg(std::size_t i, Output& o) const {
    const Declaration& d = named(i, "ideal");
    o.inputs.push_back(d.to_string());
    return std::get<IdealDecl>(d.value);
  }

  const MatrixDecl& matrix_arg(std::size_t i, Output& o) const {
    const Declaration& d = named(i, "matrix");
    o.inputs.push_back(d.to_string());
    return std::get<MatrixDecl>(d.value);
  }

  long int_arg(std::size_t i, Output& o) const {
    const std::string& t = a_->pos.at(i);
    try {
      std::size_t used = 0;
      long v = std::stol(t, &used);
      if (used == t.size()) {
        o.inputs.push_back(t);
        return v;
      }
    } catch (const std::exception&) {
    }
    throw UsageError(a_->op + ": expected an integer, found '" + t + "'");
  }

  Poly poly_arg(const RingPtr& ring, std::size_t i, Output& o) const {
    std::string text = a_->rest(i);
    try {
      Poly f = ring->parse(text);
      o.inputs.push_back(f.to_string());
      return f;
    } catch (const ParseError& e) {
      throw UsageError(a_->op + ": " + e.message + " in '" + text + "'");
    }
  }

  std::string ring_text(const std::string& name) const {
    return ring_key(std::get<RingDecl>(s_.find(name)->value).ring, std::get<RingDecl>(s_.find(name)->value).order);
  }

  static std::string gens_text(const Ideal& i) {
    std::string s;
    for (const auto& g : i.gens()) s += "," + g.to_string();
    return s;
  }

  std::vector<std::string> cached(const IdealDecl& d, const std::string& op,
                                  const std::function<std::vector<std::string>()>& f) const {
    return cache_.get(op + " | " + ring_text(d.ring) + " | ideal" + gens_text(d.ideal), d.ideal.ring(), f);
  }

  std::vector<std::string> cached(const MatrixDecl& d, const std::string& op,
                                  const std::function<std::vector<std::string>()>& f) const {
    return cache_.get(op + " | " + ring_text(d.ring) + " | matrix " + d.matrix.to_string(), d.matrix.ring(), f);
  }

  std::vector<std::string> cached2(const IdealDecl& i, const IdealDecl& j, const std::string& op,
                                   const std::function<Ideal()>& f) const {
    return cache_.get(op + " | " + ring_text(i.ring) + " | ideal" + gens_text(i.ideal) + " | ideal" +
                          gens_text(j.ideal),
                      i.ideal.ring(), [&] { return ideal_strings(f()); });
  }

  static Poly normal_form(const Ideal& i, const Poly& f) {
    const RingPtr& r = i.ring();
    Vec v = r->to_vec(f);
    if (r->is_global()) return r->from_vec(r->reduce_full(v, i.basis_vecs()), 1)[0];
    auto h = detail::mora_reduce(v, i.basis_vecs(), r->module_order(), 100000);
    if (!h) throw Undetermined{};
    return r->from_vec(*h, 1)[0];
  }

  const Session& s_;
  ResultCache cache_;
  const Args* a_ = nullptr;
  std::set<std::string> used_flags_;
};

void print(const Output& o, bool json, std::ostream& out) {
  if (json) {
    nlohmann::ordered_json j;
    j["op"] = o.op;
    j["inputs"] = o.inputs;
    j["generators"] = o.generators;
    if (o.value) j["value"] = *o.value;
    for (const auto& [k, v] : o.extra) j[k] = v;
    out << j.dump() << "\n";
    return;
  }
  out << o.label << ": " << (o.value ? *o.value : joined(o.generators, o.separator)) << "\n";
  for (const auto& [k, v] : o.extra) out << k << ": " << v << "\n";
}

}  // namespace

int run_command(const Session& session, const std::string& command, const RunOptions& options,
                std::ostream& out, std::ostream& err) {
  std::string op = "?";
  try {
    Args a = split_command(command);
    op = a.op;
    Dispatcher d(session, options, err);
    Output o = d.run(a);
    print(o, options.json, out);
    return o.exit;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeCapExceeded& e) {
    err << "aborted: " << e.what() << "\n";
    return kAborted;
  } catch (const Undetermined&) {
    err << "undetermined: " << op << " did not finish within the reduction bound\n";
    return kUndetermined;
  } catch (const std::invalid_argument& e) {
    err << "error: " << op << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << op << ": " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace singulocus::cli
