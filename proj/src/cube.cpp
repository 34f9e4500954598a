#include "dhj/cube.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace dhj {

namespace {

std::atomic<Index> g_max_points{Index{1} << 28};

void check_letter(int k, int letter)
{
    if (letter < 1 || letter > k)
        throw std::invalid_argument("letter " + std::to_string(letter) + " outside [1.." + std::to_string(k) + "]");
}

int symbol_key(int k, int symbol)
{
    return symbol > 0 ? symbol : k - symbol;
}

} // namespace

Index max_cube_points()
{
    return g_max_points.load();
}

void set_max_cube_points(Index cap)
{
    if (cap == 0)
        throw std::invalid_argument("cube cap must be positive");
    g_max_points.store(cap);
}

Index checked_power(int k, int n)
{
    if (k < 1 || n < 0)
        throw std::invalid_argument("bad power arguments");
    Index r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > std::numeric_limits<Index>::max() / static_cast<Index>(k))
            throw std::overflow_error(std::to_string(k) + "^" + std::to_string(n) + " overflows 64 bits");
        r *= static_cast<Index>(k);
    }
    return r;
}

Index cube_size(int k, int n)
{
    Index cap = max_cube_points();
    Index r = 1;
    for (int i = 0; i < n; ++i) {
        r *= static_cast<Index>(k);
        if (r > cap)
            throw std::length_error("cube [" + std::to_string(k) + "]^" + std::to_string(n) + " exceeds the cap of "
                                    + std::to_string(cap) + " points");
    }
    return r;
}

void check_alphabet(int k)
{
    if (k < 2)
        throw std::invalid_argument("alphabet size must be at least 2, got " + std::to_string(k));
}

// ---------------------------------------------------------------- Word

Word::Word(int k, std::vector<int> letters)
  : k_(k), letters_(std::move(letters))
{
    check_alphabet(k);
    if (letters_.empty())
        throw std::invalid_argument("word must have length at least 1");
    for (int a : letters_)
        check_letter(k, a);
}

Word Word::from_index(int k, int n, Index index)
{
    check_alphabet(k);
    if (n < 1)
        throw std::invalid_argument("word must have length at least 1");
    if (index >= checked_power(k, n))
        throw std::out_of_range("index outside [k]^n");
    std::vector<int> letters(n);
    for (int i = n - 1; i >= 0; --i) {
        letters[i] = static_cast<int>(index % k) + 1;
        index /= k;
    }
    return Word(k, std::move(letters));
}

Index Word::index() const
{
    checked_power(k_, length());
    Index r = 0;
    for (int a : letters_)
        r = r * k_ + static_cast<Index>(a - 1);
    return r;
}

Word concat(const Word& x, const Word& y)
{
    if (x.k() != y.k())
        throw std::invalid_argument("concat: alphabet mismatch");
    std::vector<int> letters = x.letters();
    letters.insert(letters.end(), y.letters().begin(), y.letters().end());
    return Word(x.k(), std::move(letters));
}

Word substitute(const Word& x, int from, int to)
{
    check_letter(x.k(), from);
    check_letter(x.k(), to);
    std::vector<int> letters = x.letters();
    std::replace(letters.begin(), letters.end(), from, to);
    return Word(x.k(), std::move(letters));
}

// -------------------------------------------------------- VariableWord

VariableWord::VariableWord(int k, std::vector<int> symbols)
  : k_(k), m_(0), symbols_(std::move(symbols))
{
    check_alphabet(k);
    if (symbols_.empty())
        throw std::invalid_argument("variable word must have length at least 1");
    for (int s : symbols_) {
        if (s == 0)
            throw std::invalid_argument("symbol 0 is not a letter or variable");
        if (s > 0) {
            check_letter(k, s);
        } else if (-s > m_ + 1) {
            throw std::invalid_argument("variable word is not canonical: v" + std::to_string(-s)
                                        + " occurs before v" + std::to_string(m_ + 1));
        } else {
            m_ = std::max(m_, -s);
        }
    }
    if (m_ == 0)
        throw std::invalid_argument("variable word must contain at least one variable");
}

VariableWord VariableWord::with_alphabet(int k) const
{
    return VariableWord(k, symbols_);
}

bool lex_less(const VariableWord& a, const VariableWord& b)
{
    int k = std::max(a.k(), b.k());
    return std::lexicographical_compare(a.symbols().begin(), a.symbols().end(), b.symbols().begin(),
                                        b.symbols().end(), [k](int x, int y) {
                                            return symbol_key(k, x) < symbol_key(k, y);
                                        });
}

VariableWord canonicalize(int k, std::vector<int> symbols)
{
    std::vector<int> relabel;
    for (int& s : symbols) {
        if (s >= 0)
            continue;
        int label = -s;
        if (static_cast<int>(relabel.size()) < label)
            relabel.resize(label, 0);
        if (relabel[label - 1] == 0) {
            int next = 1 + static_cast<int>(std::count_if(relabel.begin(), relabel.end(), [](int r) { return r != 0; }));
            relabel[label - 1] = next;
        }
        s = -relabel[label - 1];
    }
    return VariableWord(k, std::move(symbols));
}

Word instantiate(const VariableWord& z, std::span<const int> letters)
{
    if (static_cast<int>(letters.size()) != z.dimension())
        throw std::invalid_argument("instantiate: expected " + std::to_string(z.dimension()) + " letters, got "
                                    + std::to_string(letters.size()));
    for (int a : letters)
        check_letter(z.k(), a);
    std::vector<int> out(z.symbols());
    for (int& s : out)
        if (s < 0)
            s = letters[-s - 1];
    return Word(z.k(), std::move(out));
}

// ------------------------------------------------------------ Subspace

Subspace::Subspace(VariableWord generator)
  : generator_(std::move(generator)), weights_(generator_.dimension(), 0)
{
    const int k = generator_.k();
    const int n = generator_.length();
    checked_power(k, n);
    Index place = 1;
    for (int p = n - 1; p >= 0; --p) {
        int s = generator_[p];
        if (s > 0)
            base_ += place * static_cast<Index>(s - 1);
        else
            weights_[-s - 1] += place;
        if (p > 0)
            place *= static_cast<Index>(k);
    }
}

Index Subspace::point_index(std::span<const int> letters) const
{
    if (static_cast<int>(letters.size()) != dimension())
        throw std::invalid_argument("point_index: dimension mismatch");
    Index r = base_;
    for (int j = 0; j < dimension(); ++j) {
        check_letter(k(), letters[j]);
        r += weights_[j] * static_cast<Index>(letters[j] - 1);
    }
    return r;
}

bool Subspace::for_each_point(int letters, const std::function<bool(Index)>& fn) const
{
    if (letters < 1 || letters > k())
        throw std::invalid_argument("for_each_point: letter range out of bounds");
    const int m = dimension();
    std::vector<int> digit(m, 0);
    Index current = base_;
    for (;;) {
        if (!fn(current))
            return false;
        int j = m - 1;
        while (j >= 0 && digit[j] == letters - 1) {
            current -= weights_[j] * static_cast<Index>(digit[j]);
            digit[j] = 0;
            --j;
        }
        if (j < 0)
            return true;
        ++digit[j];
        current += weights_[j];
    }
}

std::vector<Index> Subspace::point_indices(int letters) const
{
    std::vector<Index> out;
    for_each_point(letters, [&](Index i) {
        out.push_back(i);
        return true;
    });
    return out;
}

Word embed(const Subspace& v, const Word& w)
{
    if (w.k() != v.k())
        throw std::invalid_argument("embed: alphabet mismatch");
    if (w.length() != v.dimension())
        throw std::invalid_argument("embed: word length " + std::to_string(w.length()) + " != dimension "
                                    + std::to_string(v.dimension()));
    return instantiate(v.generator(), w.letters());
}

Subspace compose(const Subspace& v, const VariableWord& inner)
{
    if (inner.length() != v.dimension())
        throw std::invalid_argument("compose: inner word length must equal the subspace dimension");
    if (inner.k() > v.k())
        throw std::invalid_argument("compose: inner alphabet larger than ambient");
    std::vector<int> out(v.generator().symbols());
    for (int& s : out)
        if (s < 0)
            s = inner[-s - 1];
    return Subspace(canonicalize(v.k(), std::move(out)));
}

Subspace compose(const Subspace& v, const Subspace& inner)
{
    return compose(v, inner.generator());
}

Subspace identity_subspace(int k, int m)
{
    std::vector<int> symbols(m);
    for (int j = 0; j < m; ++j)
        symbols[j] = -(j + 1);
    return Subspace(VariableWord(k, std::move(symbols)));
}

Subspace concat(const Word& prefix, const Subspace& v)
{
    if (prefix.k() != v.k())
        throw std::invalid_argument("concat: alphabet mismatch");
    std::vector<int> symbols = prefix.letters();
    symbols.insert(symbols.end(), v.generator().symbols().begin(), v.generator().symbols().end());
    return Subspace(VariableWord(v.k(), std::move(symbols)));
}

Subspace concat(const Subspace& v, const Word& suffix)
{
    if (suffix.k() != v.k())
        throw std::invalid_argument("concat: alphabet mismatch");
    std::vector<int> symbols = v.generator().symbols();
    symbols.insert(symbols.end(), suffix.letters().begin(), suffix.letters().end());
    return Subspace(VariableWord(v.k(), std::move(symbols)));
}

Subspace concat(const Subspace& a, const Subspace& b)
{
    if (a.k() != b.k())
        throw std::invalid_argument("concat: alphabet mismatch");
    std::vector<int> symbols = a.generator().symbols();
    const int shift = a.dimension();
    for (int s : b.generator().symbols())
        symbols.push_back(s < 0 ? s - shift : s);
    return Subspace(VariableWord(a.k(), std::move(symbols)));
}

// --------------------------------------------------------- enumeration

namespace {

struct SubspaceEnumerator {
    int k;
    int n;
    int m;
    const std::function<bool(const Subspace&)>& fn;
    std::vector<int> symbols;

    bool run(int position, int used)
    {
        if (position == n) {
            if (used != m)
                return true;
            return fn(Subspace(VariableWord(k, symbols)));
        }
        const int remaining = n - position;
        if (m - used > remaining)
            return true;
        if (m - used < remaining) {
            for (int a = 1; a <= k; ++a) {
                symbols[position] = a;
                if (!run(position + 1, used))
                    return false;
            }
        }
        for (int j = 1; j <= std::min(used + 1, m); ++j) {
            symbols[position] = -j;
            if (!run(position + 1, std::max(used, j)))
                return false;
        }
        return true;
    }
};

} // namespace

bool for_each_subspace(int k, int n, int m, const std::function<bool(const Subspace&)>& fn)
{
    check_alphabet(k);
    if (n < 1 || m < 1)
        throw std::invalid_argument("for_each_subspace: need n >= 1 and m >= 1");
    if (m > n)
        return true;
    SubspaceEnumerator e{k, n, m, fn, std::vector<int>(n, 0)};
    return e.run(0, 0);
}

bool for_each_line(int k, int n, const std::function<bool(const Line&)>& fn)
{
    return for_each_subspace(k, n, 1, fn);
}

std::vector<Subspace> enumerate_subspaces(int k, int n, int m)
{
    std::vector<Subspace> out;
    for_each_subspace(k, n, m, [&](const Subspace& v) {
        out.push_back(v);
        return true;
    });
    return out;
}

std::vector<Line> enumerate_lines(int k, int n)
{
    return enumerate_subspaces(k, n, 1);
}

BigInt count_lines(int k, int n)
{
    check_alphabet(k);
    if (n < 1)
        throw std::invalid_argument("count_lines: n must be at least 1");
    return pow(BigInt(k + 1), static_cast<unsigned long>(n)) - pow(BigInt(k), static_cast<unsigned long>(n));
}

std::vector<Line> lines_within(const Subspace& v)
{
    std::vector<Line> out;
    for_each_line(v.k(), v.dimension(), [&](const Line& model) {
        out.push_back(compose(v, model));
        return true;
    });
    return out;
}

// ---------------------------------------------------------------- text

namespace {

std::string symbol_text(int s, bool dotted)
{
    if (!dotted) {
        if (s > 0)
            return std::string(1, static_cast<char>('0' + s));
        return std::string(1, static_cast<char>('a' + (-s - 1)));
    }
    return s > 0 ? std::to_string(s) : "v" + std::to_string(-s);
}

std::vector<int> parse_symbols(int k, std::string_view text, bool allow_variables)
{
    check_alphabet(k);
    std::vector<int> out;
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("cannot parse '" + std::string(text) + "': " + why);
    };
    if (text.empty())
        throw bad("empty word");
    if (k <= 9) {
        for (char c : text) {
            if (c >= '1' && c <= '9') {
                out.push_back(c - '0');
            } else if (allow_variables && c >= 'a' && c <= 'z') {
                out.push_back(-(c - 'a' + 1));
            } else {
                throw bad(std::string("unexpected character '") + c + "'");
            }
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t dot = text.find('.', start);
            std::string_view tok = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
            if (tok.empty())
                throw bad("empty token");
            bool var = tok[0] == 'v';
            if (var && !allow_variables)
                throw bad("variables not allowed in a word");
            std::string_view digits = var ? tok.substr(1) : tok;
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
                throw bad("bad token '" + std::string(tok) + "'");
            int value = std::stoi(std::string(digits));
            out.push_back(var ? -value : value);
            if (dot == std::string_view::npos)
                break;
            start = dot + 1;
        }
    }
    for (int s : out) {
        if (s == 0)
            throw bad("letter 0");
        if (s > k)
            throw bad("letter " + std::to_string(s) + " exceeds k=" + std::to_string(k));
    }
    return out;
}

} // namespace

std::string to_string(const Word& w)
{
    const bool dotted = w.k() > 9;
    std::string out;
    for (int i = 0; i < w.length(); ++i) {
        if (dotted && i > 0)
            out += '.';
        out += symbol_text(w[i], dotted);
    }
    return out;
}

std::string to_string(const VariableWord& z)
{
    const bool dotted = z.k() > 9;
    std::string out;
    for (int i = 0; i < z.length(); ++i) {
        if (dotted && i > 0)
            out += '.';
        out += symbol_text(z[i], dotted);
    }
    return out;
}

std::string to_string(const Subspace& v)
{
    return to_string(v.generator());
}

Word parse_word(int k, std::string_view text)
{
    return Word(k, parse_symbols(k, text, false));
}

VariableWord parse_variable_word(int k, std::string_view text)
{
    return VariableWord(k, parse_symbols(k, text, true));
}

} // namespace dhj
