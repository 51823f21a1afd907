#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "mqapprox/approximator.hpp"

namespace mq {

namespace {

using nlohmann::json;

json encode_rational(const Rational& r) {
    if (is_integer(r) && r.get_num().fits_slong_p()) {
        return json(static_cast<long long>(r.get_num().get_si()));
    }
    return json(rational_to_string(r));
}

Rational decode_rational(const json& j, const char* what) {
    try {
        if (j.is_number_integer()) {
            return make_rational(j.get<long long>());
        }
        if (j.is_number_float()) {
            return rational_from_double(j.get<double>());
        }
        if (j.is_string()) {
            return rational_from_string(j.get<std::string>());
        }
    } catch (const std::exception& err) {
        throw std::invalid_argument(std::string(what) + ": " + err.what());
    }
    throw std::invalid_argument(std::string(what) + ": expected a number or a rational string");
}

}  // namespace

std::string approximant_to_json(const Approximant& appr) {
    json doc;
    doc["k"] = appr.params().k;
    doc["c"] = rational_to_string(appr.params().c);
    doc["precision_bits"] = appr.precision_bits();
    doc["interval"] = json::array({appr.interval().a, appr.interval().b});
    json terms = json::array();
    for (const auto& term : appr.terms()) {
        terms.push_back(json::array({encode_rational(term.center), term.coeff.to_string()}));
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

Approximant approximant_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("approximant document: ") + err.what());
    }
    try {
        const unsigned k = doc.at("k").get<unsigned>();
        MultiquadricParams params(k, decode_rational(doc.at("c"), "shape parameter c"));
        const long precision = doc.at("precision_bits").get<long>();
        const auto& iv = doc.at("interval");
        if (!iv.is_array() || iv.size() != 2) {
            throw std::invalid_argument("interval must be a two-element array");
        }
        Interval interval(iv.at(0).get<double>(), iv.at(1).get<double>());
        std::vector<ApproximantTerm> terms;
        for (const auto& entry : doc.at("terms")) {
            if (!entry.is_array() || entry.size() != 2) {
                throw std::invalid_argument("each term must be a [center, coefficient] pair");
            }
            Rational center = decode_rational(entry.at(0), "term center");
            BigFloat coeff = BigFloat::from_string(entry.at(1).get<std::string>(), precision);
            terms.push_back({std::move(center), std::move(coeff)});
        }
        return Approximant(std::move(params), std::move(terms), interval, precision);
    } catch (const json::exception& err) {
        throw std::invalid_argument(std::string("approximant document: ") + err.what());
    }
}

}  // namespace mq
