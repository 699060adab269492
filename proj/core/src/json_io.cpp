#include "jacksym/json_io.hpp"

#include <json.hpp>

namespace jacksym::json_io {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json partition_value(const Partition& lambda) {
    ordered_json arr = ordered_json::array();
    for (int p : lambda.parts()) arr.push_back(p);
    return arr;
}

Partition partition_value_parse(const ordered_json& v) {
    if (!v.is_array()) throw ParseError("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw ParseError("partition parts must be integers");
        parts.push_back(e.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

ordered_json poly_value(const AlphaPoly& p) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        const BigRat& c = p.coeff(k);
        arr.push_back(ordered_json::array({c.num_string(), c.den_string()}));
    }
    return arr;
}

AlphaPoly poly_value_parse(const ordered_json& v) {
    if (!v.is_array()) throw ParseError("polynomial must be a JSON array of coefficient pairs");
    std::vector<BigRat> coeffs;
    for (const auto& pair : v) {
        if (pair.is_number_integer()) {
            coeffs.push_back(BigRat(static_cast<long>(pair.get<long long>())));
            continue;
        }
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("polynomial coefficient must be a [numerator, denominator] pair");
        std::string num;
        std::string den;
        for (size_t k = 0; k < 2; ++k) {
            const auto& side = pair[k];
            std::string text;
            if (side.is_string())
                text = side.get<std::string>();
            else if (side.is_number_integer())
                text = std::to_string(side.get<long long>());
            else
                throw ParseError("coefficient entries must be integers or decimal strings");
            (k == 0 ? num : den) = text;
        }
        coeffs.push_back(BigRat::from_strings(num, den));
    }
    return AlphaPoly::from_coeffs(std::move(coeffs));
}

ordered_json rat_fun_value(const RatFun& f) {
    ordered_json obj;
    obj["num"] = poly_value(f.num());
    obj["den"] = poly_value(f.den());
    return obj;
}

RatFun rat_fun_value_parse(const ordered_json& v) {
    if (!v.is_object() || !v.contains("num") || !v.contains("den"))
        throw ParseError("rational function needs \"num\" and \"den\" keys");
    try {
        return RatFun(poly_value_parse(v.at("num")), poly_value_parse(v.at("den")));
    } catch (const DivisionByZero&) {
        throw ParseError("rational function denominator is zero");
    }
}

ordered_json sym_func_value(const SymFunc& f) {
    ordered_json obj;
    obj["basis"] = basis_tag(f.basis());
    ordered_json terms = ordered_json::array();
    for (const auto& [lambda, c] : f.terms()) {
        ordered_json term;
        term["partition"] = partition_value(lambda);
        term["coeff"] = rat_fun_value(c);
        terms.push_back(std::move(term));
    }
    obj["terms"] = std::move(terms);
    return obj;
}

SymFunc sym_func_value_parse(const ordered_json& v) {
    if (!v.is_object() || !v.contains("basis") || !v.contains("terms"))
        throw ParseError("symmetric function needs \"basis\" and \"terms\" keys");
    if (!v.at("basis").is_string()) throw ParseError("\"basis\" must be a string");
    const auto basis = basis_from_tag(v.at("basis").get<std::string>());
    if (!basis) throw ParseError("unknown basis tag \"" + v.at("basis").get<std::string>() + "\"");
    if (!v.at("terms").is_array()) throw ParseError("\"terms\" must be an array");
    SymFunc f(*basis);
    for (const auto& term : v.at("terms")) {
        if (!term.is_object() || !term.contains("partition") || !term.contains("coeff"))
            throw ParseError("term needs \"partition\" and \"coeff\" keys");
        f.add_term(partition_value_parse(term.at("partition")),
                   rat_fun_value_parse(term.at("coeff")));
    }
    return f;
}

ordered_json euler_value(const EulerClass& e) {
    ordered_json obj;
    obj["coeff"] = rat_fun_value(e.coeff);
    obj["u_pow"] = e.u_power;
    return obj;
}

ordered_json parse_document(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON");
    return doc;
}

} // namespace

std::string partition_to_json(const Partition& lambda) { return partition_value(lambda).dump(); }

Partition partition_from_json(const std::string& text) {
    return partition_value_parse(parse_document(text));
}

std::string rat_fun_to_json(const RatFun& f) { return rat_fun_value(f).dump(); }

RatFun rat_fun_from_json(const std::string& text) {
    return rat_fun_value_parse(parse_document(text));
}

std::string sym_func_to_json(const SymFunc& f) { return sym_func_value(f).dump(); }

SymFunc sym_func_from_json(const std::string& text) {
    return sym_func_value_parse(parse_document(text));
}

std::string fixed_point_to_json(const FixedPointData& data) {
    ordered_json obj;
    obj["partition"] = partition_value(data.lambda);
    ordered_json ch = ordered_json::array();
    for (const auto& [pq, mult] : data.character.terms) {
        ordered_json term;
        term["p"] = pq.first;
        term["q"] = pq.second;
        term["mult"] = mult;
        ch.push_back(std::move(term));
    }
    obj["char"] = std::move(ch);
    obj["euler_total"] = euler_value(data.euler_total);
    obj["euler_pos"] = euler_value(data.euler_pos);
    obj["euler_nonpos"] = euler_value(data.euler_nonpos);
    return obj.dump();
}

} // namespace jacksym::json_io
