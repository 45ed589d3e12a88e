#include "adc/io.hpp"
#include "adc/error.hpp"

#include <fmt/format.h>

#include <limits>

namespace adc {

namespace {

Json coefficient_to_json(const Integer& c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

[[noreturn]] void schema(const std::string& field, const std::string& what)
{
    throw Error(ErrorKind::SchemaError, fmt::format("{}: {}", field, what));
}

Integer coefficient_from_json(const Json& j, const std::string& field)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            schema(field, fmt::format("'{}' is not an integer", s));
        return Integer(s);
    }
    schema(field, "expected an integer");
}

const std::string& string_field(const Json& obj, const char* key, const std::string& field)
{
    auto it = obj.find(key);
    if (it == obj.end())
        schema(field, fmt::format("missing '{}'", key));
    if (!it->is_string())
        schema(fmt::format("{}.{}", field, key), "expected a string");
    return it->get_ref<const std::string&>();
}

Chain chain_from_json(const Json& j, int degree, const Complex& k, const std::string& field)
{
    if (!j.is_array())
        schema(field, "expected an array of [coef, id] terms");
    Chain c(degree);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& t = j[i];
        const std::string f = fmt::format("{}[{}]", field, i);
        if (!t.is_array() || t.size() != 2 || !t[1].is_string())
            schema(f, "expected [coef, id]");
        const Id id = t[1].get<std::string>();
        auto deg = k.find_degree(id);
        if (!deg)
            schema(f, fmt::format("unknown basis element '{}'", id));
        if (*deg != degree)
            schema(f, fmt::format("'{}' has degree {}, expected {}", id, *deg, degree));
        c.add(id, coefficient_from_json(t[0], f));
    }
    return c;
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorKind::ParseError, fmt::format("line {}, column {}: {}", line, column, e.what()));
    }
}

Json chain_to_json(const Chain& c)
{
    Json out = Json::array();
    for (const auto& [id, coef] : c.terms())
        out.push_back(Json::array({coefficient_to_json(coef), id}));
    return out;
}

Json adc_to_json(const Complex& k)
{
    Json out = Json::object();
    out["name"] = k.name();
    Json basis = Json::array();
    for (const auto& e : k.basis())
        basis.push_back(Json{{"id", e.id}, {"deg", e.degree}});
    out["basis"] = std::move(basis);
    Json d = Json::object();
    Json aug = Json::object();
    for (const auto& e : k.basis()) {
        Chain c = k.d(e.id);
        if (!c.is_zero())
            d[e.id] = chain_to_json(c);
        if (e.degree == 0)
            aug[e.id] = coefficient_to_json(k.aug(e.id));
    }
    out["d"] = std::move(d);
    out["aug"] = std::move(aug);
    if (const auto& m = k.marks())
        out["marks"] = Json{{"source", m->source}, {"target", m->target}};
    return out;
}

Complex adc_from_json(const Json& j)
{
    if (!j.is_object())
        schema("root", "expected an object");
    Complex k;
    auto name = j.find("name");
    if (name == j.end() || !name->is_string())
        schema("name", "expected a string");
    k.set_name(name->get<std::string>());
    auto basis = j.find("basis");
    if (basis == j.end())
        schema("basis", "missing");
    if (!basis->is_array())
        schema("basis", "expected an array");
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const Json& e = (*basis)[i];
        const std::string f = fmt::format("basis[{}]", i);
        if (!e.is_object())
            schema(f, "expected {id, deg}");
        const Id& id = string_field(e, "id", f);
        auto deg = e.find("deg");
        if (deg == e.end() || !deg->is_number_integer() || deg->get<std::int64_t>() < 0 ||
            deg->get<std::int64_t>() > std::numeric_limits<int>::max())
            schema(f + ".deg", "expected a nonnegative integer");
        if (k.contains(id))
            schema(f + ".id", fmt::format("duplicate id '{}'", id));
        k.add(id, deg->get<int>());
    }
    if (auto d = j.find("d"); d != j.end()) {
        if (!d->is_object())
            schema("d", "expected an object");
        for (const auto& [id, value] : d->items()) {
            const std::string f = fmt::format("d.{}", id);
            auto deg = k.find_degree(id);
            if (!deg)
                schema(f, "unknown basis element");
            if (*deg == 0 && !(value.is_array() && value.empty()))
                schema(f, "degree-0 elements have zero differential");
            k.set_d(id, chain_from_json(value, *deg - 1, k, f));
        }
    }
    if (auto aug = j.find("aug"); aug != j.end()) {
        if (!aug->is_object())
            schema("aug", "expected an object");
        for (const auto& [id, value] : aug->items()) {
            const std::string f = fmt::format("aug.{}", id);
            auto deg = k.find_degree(id);
            if (!deg)
                schema(f, "unknown basis element");
            if (*deg != 0)
                schema(f, fmt::format("'{}' has degree {}, expected 0", id, *deg));
            k.set_aug(id, coefficient_from_json(value, f));
        }
    }
    if (auto marks = j.find("marks"); marks != j.end() && !marks->is_null()) {
        if (!marks->is_object())
            schema("marks", "expected {source, target}");
        Marks m{string_field(*marks, "source", "marks"), string_field(*marks, "target", "marks")};
        for (const auto& [key, id] : {std::pair{"source", m.source}, std::pair{"target", m.target}}) {
            auto deg = k.find_degree(id);
            if (!deg || *deg != 0)
                schema(fmt::format("marks.{}", key), fmt::format("'{}' is not a degree-0 basis element", id));
        }
        k.set_marks(m);
    }
    return k;
}

std::string encode_adc(const Complex& k, int indent)
{
    return adc_to_json(k).dump(indent);
}

Complex decode_adc(std::string_view text)
{
    return adc_from_json(parse_json(text));
}

Json cell_to_json(const Cell& c)
{
    Json rows = Json::array();
    for (const auto& r : c.rows)
        rows.push_back(Json::array({chain_to_json(r.minus), chain_to_json(r.plus)}));
    return Json{{"dim", c.dim()}, {"rows", std::move(rows)}};
}

Cell cell_from_json(const Json& j, const Complex& k)
{
    const Json* rows = &j;
    if (j.is_object()) {
        auto it = j.find("rows");
        if (it == j.end())
            schema("cell", "missing 'rows'");
        rows = &*it;
    }
    if (!rows->is_array())
        schema("cell.rows", "expected an array");
    Cell c;
    for (std::size_t q = 0; q < rows->size(); ++q) {
        const Json& r = (*rows)[q];
        const std::string f = fmt::format("cell.rows[{}]", q);
        if (!r.is_array() || r.size() != 2)
            schema(f, "expected [minus, plus]");
        c.rows.push_back(CellRow{chain_from_json(r[0], static_cast<int>(q), k, f + "[0]"),
                                 chain_from_json(r[1], static_cast<int>(q), k, f + "[1]")});
    }
    if (j.is_object()) {
        if (auto dim = j.find("dim"); dim != j.end() && (!dim->is_number_integer() || dim->get<int>() != c.dim()))
            schema("cell.dim", "does not match the number of rows");
    }
    return c;
}

Cell decode_cell(std::string_view text, const Complex& k)
{
    return cell_from_json(parse_json(text), k);
}

Json step_to_json(const AttachStep& s)
{
    return Json{{"m", s.m}, {"id", s.new_id}, {"source", cell_to_json(s.source)}, {"target", cell_to_json(s.target)}};
}

Json js_generator_to_json(const JsGenerator& g)
{
    return Json{{"base", adc_to_json(g.base)},
                {"step", step_to_json(g.step)},
                {"result", adc_to_json(g.result)},
                {"site_member", g.site_member}};
}

Json check_report_to_json(const CheckReport& r)
{
    Json parts = Json::array();
    for (const auto& p : r.parts)
        parts.push_back(Json{{"name", p.name}, {"status", to_string(p.status)}, {"detail", p.detail}});
    Json out{{"check", r.check}, {"subject", r.subject}, {"status", to_string(r.status)}, {"parts", std::move(parts)}};
    if (!r.notes.empty())
        out["notes"] = r.notes;
    if (r.bijection) {
        Json b = Json::object();
        for (const auto& [from, to] : *r.bijection)
            b[from] = to;
        out["bijection"] = std::move(b);
    }
    if (!r.matches.empty()) {
        Json m = Json::array();
        for (const auto& c : r.matches)
            m.push_back(cell_to_json(c));
        out["matches"] = std::move(m);
    }
    return out;
}

Json suite_report_to_json(const SuiteReport& s, bool include_timings)
{
    Json reports = Json::array();
    for (const auto& t : s.reports) {
        Json j = check_report_to_json(t.report);
        if (include_timings)
            j["seconds"] = t.seconds;
        reports.push_back(std::move(j));
    }
    return Json{{"passed", s.passed()}, {"reports", std::move(reports)}, {"warnings", s.warnings}};
}

} // namespace adc
