#include "zz/json_io.hpp"

#include <limits>
#include <string>

#include "zz/error.hpp"

namespace zz {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

Json dib_to_json(const Dib& d) { return Json{{"k", d.k}, {"j", d.j}}; }

Json dibs_of(const DibPoset& poset, Mask members) {
  Json out = Json::array();
  for (int i : member_indices(members)) out.push_back(dib_to_json(poset.element(i)));
  return out;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string '" + j.get<std::string>() + "'");
    return v;
  }
  throw ParseError("expected an integer");
}

Json strip_to_json(const StripSpec& spec) {
  Json shapes = Json::array();
  for (Shape s : spec.shapes) shapes.push_back(std::string(1, to_char(s)));
  return Json{{"shapes", shapes}, {"n", spec.n}};
}

StripSpec strip_from_json(const Json& j) {
  StripSpec spec;
  const Json& shapes = field(j, "shapes");
  if (!shapes.is_array()) throw ParseError("'shapes' must be an array");
  for (const Json& s : shapes) {
    if (!s.is_string() || s.get<std::string>().size() != 1) throw ParseError("shape codes are single letters");
    spec.shapes.push_back(shape_from_char(s.get<std::string>()[0]));
  }
  spec.n = int_field(j, "n");
  return spec;
}

Json poset_to_json(const DibPoset& poset) {
  Json elements = Json::array();
  for (const Dib& d : poset.elements()) elements.push_back(dib_to_json(d));
  Json covers = Json::array();
  for (auto [a, b] : poset.covers()) covers.push_back(Json::array({a, b}));
  return Json{{"elements", elements}, {"covers", covers}};
}

DibPoset poset_from_json(const Json& j) {
  std::vector<Dib> elements;
  for (const Json& e : field(j, "elements")) elements.push_back({int_field(e, "k"), int_field(e, "j")});
  std::vector<std::pair<int, int>> rel;
  for (const Json& c : field(j, "covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
      throw ParseError("covers are [lower, upper] index pairs");
    }
    rel.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return DibPoset(std::move(elements), rel);
}

Json zz_result_to_json(const ZzResult& r) {
  Json coeffs = Json::array();
  for (const BigInt& c : r.zz.coeffs()) coeffs.push_back(bigint_to_json(c));
  Json out{{"zz", {{"coeffs", coeffs}}}};
  if (r.closed_form) {
    Json groups = Json::array();
    for (const auto& g : r.closed_form->groups) {
      groups.push_back({{"des", g.des}, {"fix", g.fix}, {"mult", bigint_to_json(g.mult)}});
    }
    out["closed_form"] = {{"p", r.closed_form->p}, {"groups", groups}};
  }
  return out;
}

ZzResult zz_result_from_json(const Json& j) {
  ZzResult r;
  std::vector<BigInt> coeffs;
  for (const Json& c : field(field(j, "zz"), "coeffs")) coeffs.push_back(bigint_from_json(c));
  r.zz = Polynomial(std::move(coeffs));
  if (j.contains("closed_form")) {
    const Json& cf = j.at("closed_form");
    ClosedForm form;
    form.p = int_field(cf, "p");
    for (const Json& g : field(cf, "groups")) {
      form.groups.push_back({int_field(g, "des"), int_field(g, "fix"), bigint_from_json(field(g, "mult"))});
    }
    r.closed_form = std::move(form);
  }
  return r;
}

Json kekule_to_json(const DibPoset& poset, const KekuleRecord& rec) {
  Json pos = Json::array();
  for (std::size_t k = 0; k < rec.assignment.positions.size(); ++k) {
    for (int p : rec.assignment.positions[k]) pos.push_back(Json::array({static_cast<int>(k) + 1, p}));
  }
  return Json{{"A", dibs_of(poset, rec.map.members)}, {"mu", rec.map.values}, {"pos", pos}};
}

Json clar_to_json(const DibPoset& poset, const ClarCoverRecord& rec) {
  Json out = kekule_to_json(poset, KekuleRecord{rec.map, rec.base});
  out["aromatic"] = dibs_of(poset, rec.aromatic);
  return out;
}

}  // namespace zz
