#include "mbqc/gf2expr.h"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "mbqc/error.h"

namespace mbqc {

Gf2Expr Gf2Expr::constant(bool bit) {
    Gf2Expr e;
    e.constant_ = bit;
    return e;
}

Gf2Expr Gf2Expr::var(QubitId qubit) {
    Gf2Expr e;
    e.vars_.push_back(qubit);
    return e;
}

Gf2Expr Gf2Expr::from_terms(std::vector<QubitId> vars, bool constant) {
    std::sort(vars.begin(), vars.end());
    Gf2Expr e;
    e.constant_ = constant;
    for (size_t k = 0; k < vars.size();) {
        size_t run = k;
        while (run < vars.size() && vars[run] == vars[k]) {
            run++;
        }
        if ((run - k) % 2 == 1) {
            e.vars_.push_back(vars[k]);
        }
        k = run;
    }
    return e;
}

Gf2Expr Gf2Expr::parse(std::string_view text) {
    auto fail = [&]() -> ParseError {
        return ParseError("malformed GF(2) expression '" + std::string(text) + "'");
    };
    if (text.empty()) {
        throw fail();
    }
    std::vector<QubitId> vars;
    bool constant = false;
    size_t pos = 0;
    while (true) {
        size_t end = text.find('^', pos);
        std::string_view term = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        if (term == "0") {
        } else if (term == "1") {
            constant = !constant;
        } else if (term.size() >= 2 && term[0] == 's') {
            QubitId q{};
            auto [ptr, ec] = std::from_chars(term.data() + 1, term.data() + term.size(), q);
            if (ec != std::errc() || ptr != term.data() + term.size()) {
                throw fail();
            }
            vars.push_back(q);
        } else {
            throw fail();
        }
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 1;
    }
    return from_terms(std::move(vars), constant);
}

bool Gf2Expr::contains(QubitId qubit) const {
    return std::binary_search(vars_.begin(), vars_.end(), qubit);
}

Gf2Expr &Gf2Expr::operator^=(const Gf2Expr &other) {
    std::vector<QubitId> merged;
    merged.reserve(vars_.size() + other.vars_.size());
    std::set_symmetric_difference(
        vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(), std::back_inserter(merged));
    vars_ = std::move(merged);
    constant_ ^= other.constant_;
    return *this;
}

bool Gf2Expr::evaluate(const Assignment &assignment) const {
    bool result = constant_;
    for (QubitId q : vars_) {
        auto it = assignment.find(q);
        if (it == assignment.end()) {
            throw MissingVariableError("no outcome assigned to s" + std::to_string(q));
        }
        result ^= it->second;
    }
    return result;
}

std::string Gf2Expr::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (QubitId q : vars_) {
        if (!out.empty()) {
            out += '^';
        }
        out += 's';
        out += std::to_string(q);
    }
    if (constant_) {
        if (!out.empty()) {
            out += '^';
        }
        out += '1';
    }
    return out;
}

}  // namespace mbqc
