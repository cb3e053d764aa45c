#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace specix {

enum class species_kind {
    zero,          // empty species
    one,           // empty-set species
    singleton_x,   // X
    singleton_y,   // Y
    set_species,   // E
    set_of_size,   // E_k
    nonempty_set,  // Eplus = E - 1
    sum,
    difference,
    product,
    compose,       // a after b: a(b)
    derivative,    // a', order-many times
};

struct species_expr;
using species_ptr = std::shared_ptr<const species_expr>;

/// AST node for the species-expression language. Atoms carry no children;
/// compose stores outer in `a` and inner in `b`; derivative stores its order.
struct species_expr {
    species_kind kind = species_kind::zero;
    unsigned size_k = 0;     // set_of_size
    unsigned order = 0;      // derivative
    species_ptr a, b;
    std::size_t src_pos = 0; // offset into the source text, for diagnostics
};

namespace sp {

inline species_ptr make(species_expr e) { return std::make_shared<const species_expr>(std::move(e)); }

inline species_ptr atom(species_kind k) {
    species_expr e;
    e.kind = k;
    return make(std::move(e));
}

inline species_ptr zero() { return atom(species_kind::zero); }
inline species_ptr one() { return atom(species_kind::one); }
inline species_ptr x() { return atom(species_kind::singleton_x); }
inline species_ptr y() { return atom(species_kind::singleton_y); }
inline species_ptr set() { return atom(species_kind::set_species); }
inline species_ptr set_of_size(unsigned k) {
    species_expr e;
    e.kind = species_kind::set_of_size;
    e.size_k = k;
    return make(std::move(e));
}
inline species_ptr nonempty_set() { return atom(species_kind::nonempty_set); }

inline species_ptr node(species_kind kind, species_ptr a, species_ptr b) {
    species_expr e;
    e.kind = kind;
    e.a = std::move(a);
    e.b = std::move(b);
    return make(std::move(e));
}

inline species_ptr sum(species_ptr a, species_ptr b) {
    return node(species_kind::sum, std::move(a), std::move(b));
}
inline species_ptr difference(species_ptr a, species_ptr b) {
    return node(species_kind::difference, std::move(a), std::move(b));
}
inline species_ptr product(species_ptr a, species_ptr b) {
    return node(species_kind::product, std::move(a), std::move(b));
}
inline species_ptr compose(species_ptr outer, species_ptr inner) {
    return node(species_kind::compose, std::move(outer), std::move(inner));
}
inline species_ptr derivative(species_ptr f, unsigned order = 1) {
    if (order == 0) return f;
    species_expr e;
    e.kind = species_kind::derivative;
    e.order = order;
    e.a = std::move(f);
    return make(std::move(e));
}

} // namespace sp

class species_parse_error : public std::runtime_error {
public:
    species_parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Recursive-descent parser for:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ("'")*
//   primary:= atom | atom '(' expr ')' | '(' expr ')'
//   atom   := '0' | '1' | 'X' | 'Y' | 'E' | 'E_' INT | 'Eplus'
// Whitespace is insignificant; a prime is the derivative and may repeat.
class species_parser {
public:
    explicit species_parser(std::string_view text) : text_(text) {}

    species_ptr parse() {
        species_ptr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw species_parse_error("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    species_ptr parse_expr() {
        species_ptr lhs = parse_term();
        for (;;) {
            if (consume('+')) lhs = sp::sum(lhs, parse_term());
            else if (consume('-')) lhs = sp::difference(lhs, parse_term());
            else return lhs;
        }
    }

    species_ptr parse_term() {
        species_ptr lhs = parse_factor();
        while (consume('*')) lhs = sp::product(lhs, parse_factor());
        return lhs;
    }

    species_ptr parse_factor() {
        species_ptr e = parse_primary();
        unsigned order = 0;
        while (consume('\'')) ++order;
        return sp::derivative(e, order);
    }

    species_ptr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw species_parse_error("unexpected end of input", pos_);
        const std::size_t start = pos_;
        if (consume('(')) {
            species_ptr e = parse_expr();
            if (!consume(')')) throw species_parse_error("expected ')'", pos_);
            return e;
        }
        species_ptr atom = parse_atom();
        if (consume('(')) {
            species_ptr inner = parse_expr();
            if (!consume(')')) throw species_parse_error("expected ')'", pos_);
            auto node = sp::compose(atom, inner);
            const_cast<species_expr*>(node.get())->src_pos = start;
            return node;
        }
        return atom;
    }

    species_ptr parse_atom() {
        skip_ws();
        const std::size_t start = pos_;
        std::string tok;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            tok += text_[pos_++];
        if (tok.empty()) throw species_parse_error("expected an atom", start);

        species_ptr e;
        if (tok == "0") e = sp::zero();
        else if (tok == "1") e = sp::one();
        else if (tok == "X") e = sp::x();
        else if (tok == "Y") e = sp::y();
        else if (tok == "E") e = sp::set();
        else if (tok == "Eplus") e = sp::nonempty_set();
        else if (tok.rfind("E_", 0) == 0) {
            const std::string digits = tok.substr(2);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw species_parse_error("'E_' must be followed by an integer", start);
            e = sp::set_of_size(static_cast<unsigned>(std::stoul(digits)));
        } else {
            throw species_parse_error("unknown atom '" + tok + "'", start);
        }
        const_cast<species_expr*>(e.get())->src_pos = start;
        return e;
    }
};

} // namespace detail

inline species_ptr parse_species(std::string_view text) {
    return detail::species_parser(text).parse();
}

namespace detail {

// Precedence levels for printing: sum 1, product 2, postfix 3.
inline void format_species_rec(std::ostream& os, const species_ptr& e, int parent_prec) {
    const auto paren = [&](int prec, auto&& body) {
        if (prec < parent_prec) {
            os << '(';
            body();
            os << ')';
        } else {
            body();
        }
    };
    switch (e->kind) {
        case species_kind::zero: os << '0'; return;
        case species_kind::one: os << '1'; return;
        case species_kind::singleton_x: os << 'X'; return;
        case species_kind::singleton_y: os << 'Y'; return;
        case species_kind::set_species: os << 'E'; return;
        case species_kind::set_of_size: os << "E_" << e->size_k; return;
        case species_kind::nonempty_set: os << "Eplus"; return;
        case species_kind::sum:
            paren(1, [&] {
                format_species_rec(os, e->a, 1);
                os << " + ";
                format_species_rec(os, e->b, 2);
            });
            return;
        case species_kind::difference:
            paren(1, [&] {
                format_species_rec(os, e->a, 1);
                os << " - ";
                format_species_rec(os, e->b, 2);
            });
            return;
        case species_kind::product:
            paren(2, [&] {
                format_species_rec(os, e->a, 2);
                os << '*';
                format_species_rec(os, e->b, 3);
            });
            return;
        case species_kind::compose:
            paren(3, [&] {
                format_species_rec(os, e->a, 3);
                os << '(';
                format_species_rec(os, e->b, 1);
                os << ')';
            });
            return;
        case species_kind::derivative:
            paren(3, [&] {
                format_species_rec(os, e->a, 4);
                for (unsigned i = 0; i < e->order; ++i) os << '\'';
            });
            return;
    }
}

} // namespace detail

/// Canonical text form; reparsing yields an equivalent tree.
inline std::string format_species(const species_ptr& e) {
    std::ostringstream os;
    detail::format_species_rec(os, e, 1);
    return os.str();
}

inline void species_json(std::ostream& os, const species_ptr& e) {
    switch (e->kind) {
        case species_kind::zero: os << "{\"kind\":\"zero\"}"; return;
        case species_kind::one: os << "{\"kind\":\"one\"}"; return;
        case species_kind::singleton_x: os << "{\"kind\":\"X\"}"; return;
        case species_kind::singleton_y: os << "{\"kind\":\"Y\"}"; return;
        case species_kind::set_species: os << "{\"kind\":\"E\"}"; return;
        case species_kind::set_of_size: os << "{\"kind\":\"E_k\",\"k\":" << e->size_k << '}'; return;
        case species_kind::nonempty_set: os << "{\"kind\":\"Eplus\"}"; return;
        case species_kind::derivative:
            os << "{\"kind\":\"derivative\",\"order\":" << e->order << ",\"arg\":";
            species_json(os, e->a);
            os << '}';
            return;
        default: {
            const char* name = e->kind == species_kind::sum ? "sum"
                               : e->kind == species_kind::difference ? "difference"
                               : e->kind == species_kind::product ? "product"
                                                                  : "compose";
            os << "{\"kind\":\"" << name << "\",\"args\":[";
            species_json(os, e->a);
            os << ',';
            species_json(os, e->b);
            os << "]}";
            return;
        }
    }
}

inline bool mentions_y(const species_ptr& e) {
    if (e->kind == species_kind::singleton_y) return true;
    if (e->a && mentions_y(e->a)) return true;
    if (e->b && mentions_y(e->b)) return true;
    return false;
}

/// Largest degree in which the species can have structures, or nullopt when
/// unbounded (contains E or Eplus in a position that survives). This is a
/// structural over-approximation: expressions that cancel to something finite
/// (like E - Eplus) still report unbounded.
inline std::optional<unsigned> max_degree(const species_ptr& e) {
    using opt = std::optional<unsigned>;
    switch (e->kind) {
        case species_kind::zero:
        case species_kind::one: return 0u;
        case species_kind::singleton_x:
        case species_kind::singleton_y: return 1u;
        case species_kind::set_of_size: return e->size_k;
        case species_kind::set_species:
        case species_kind::nonempty_set: return std::nullopt;
        case species_kind::sum:
        case species_kind::difference: {
            const opt da = max_degree(e->a), db = max_degree(e->b);
            if (!da || !db) return std::nullopt;
            return std::max(*da, *db);
        }
        case species_kind::product: {
            const opt da = max_degree(e->a), db = max_degree(e->b);
            if (!da || !db) return std::nullopt;
            return *da + *db;
        }
        case species_kind::compose: {
            const opt da = max_degree(e->a), db = max_degree(e->b);
            if (!da || !db) return std::nullopt;
            return *da * *db;
        }
        case species_kind::derivative: {
            const opt da = max_degree(e->a);
            if (!da) return std::nullopt;
            return *da >= e->order ? *da - e->order : 0u;
        }
    }
    return std::nullopt;
}

inline bool strictly_finite(const species_ptr& e) { return max_degree(e).has_value(); }

namespace detail {

inline species_ptr derive_once(const species_ptr& e) {
    switch (e->kind) {
        case species_kind::zero:
        case species_kind::one:
        case species_kind::singleton_y: return sp::zero();
        case species_kind::singleton_x: return sp::one();
        case species_kind::set_species:
        case species_kind::nonempty_set: return sp::set();
        case species_kind::set_of_size:
            if (e->size_k == 0) return sp::zero();
            if (e->size_k == 1) return sp::one();
            return sp::set_of_size(e->size_k - 1);
        case species_kind::sum: return sp::sum(derive_once(e->a), derive_once(e->b));
        case species_kind::difference:
            return sp::difference(derive_once(e->a), derive_once(e->b));
        case species_kind::product:
            return sp::sum(sp::product(derive_once(e->a), e->b),
                           sp::product(e->a, derive_once(e->b)));
        case species_kind::compose:
            // (F o G)' = (F' o G) * G'
            return sp::product(sp::compose(derive_once(e->a), e->b), derive_once(e->b));
        case species_kind::derivative: {
            species_ptr inner = e->a;
            for (unsigned i = 0; i < e->order + 1; ++i) inner = derive_once(inner);
            return inner;
        }
    }
    return sp::zero();
}

} // namespace detail

/// Rewrites the tree so no derivative node remains, pushing primes down to
/// atoms via the product, sum, and chain rules.
inline species_ptr expand_derivative(const species_ptr& e) {
    switch (e->kind) {
        case species_kind::sum:
            return sp::sum(expand_derivative(e->a), expand_derivative(e->b));
        case species_kind::difference:
            return sp::difference(expand_derivative(e->a), expand_derivative(e->b));
        case species_kind::product:
            return sp::product(expand_derivative(e->a), expand_derivative(e->b));
        case species_kind::compose:
            return sp::compose(expand_derivative(e->a), expand_derivative(e->b));
        case species_kind::derivative: {
            species_ptr inner = expand_derivative(e->a);
            for (unsigned i = 0; i < e->order; ++i) inner = detail::derive_once(inner);
            return expand_derivative(inner);
        }
        default: return e;
    }
}

} // namespace specix
