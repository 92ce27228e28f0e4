#include <tricolor/error.hh>
#include <tricolor/parity.hh>

#include <algorithm>
#include <unordered_map>

using namespace tricolor;

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

ParitySeq::ParitySeq(vector<Parity> entries) :
    _entries(std::move(entries))
{
    if (_entries.size() < 2 || _entries.size() % 2 != 0)
        throw Error{ErrorKind::InvalidInput, "parity sequence length must be even and at least 2, got "
            + std::to_string(_entries.size())};
}

auto ParitySeq::count(Parity p) const -> size_t
{
    return static_cast<size_t>(std::count(_entries.begin(), _entries.end(), p));
}

auto ParitySeq::rotated(size_t offset) const -> ParitySeq
{
    vector<Parity> out(_entries.size());
    for (size_t i = 0; i < _entries.size(); ++i)
        out[i] = _entries[(offset + i) % _entries.size()];
    return ParitySeq{std::move(out)};
}

auto ParitySeq::reversed() const -> ParitySeq
{
    return ParitySeq{vector<Parity>(_entries.rbegin(), _entries.rend())};
}

auto tricolor::parse_parity_seq(string_view text) -> ParitySeq
{
    vector<Parity> entries;
    entries.reserve(text.size());
    for (char c : text) {
        if (c == 'e' || c == 'E')
            entries.push_back(Parity::E);
        else if (c == 'o' || c == 'O')
            entries.push_back(Parity::O);
        else
            throw Error{ErrorKind::ParseError, "unexpected character '" + string(1, c) + "' in parity sequence"};
    }
    if (entries.empty() || entries.size() % 2 != 0)
        throw Error{ErrorKind::ParseError, "parity sequence must have even, non-zero length"};
    return ParitySeq{std::move(entries)};
}

auto tricolor::to_string(const ParitySeq & seq) -> string
{
    string out;
    out.reserve(seq.size());
    for (auto p : seq.entries())
        out.push_back(p == Parity::E ? 'e' : 'o');
    return out;
}

auto tricolor::e_collapse(const ParitySeq & seq, size_t j) -> ParitySeq
{
    const size_t n = seq.size();
    if (j >= n)
        throw Error{ErrorKind::IndexOutOfRange, "collapse index " + std::to_string(j) + " outside length " + std::to_string(n)};
    if (seq[j] != Parity::E)
        throw Error{ErrorKind::EntryNotEven, "entry " + std::to_string(j) + " is odd"};
    if (n < 4)
        throw Error{ErrorKind::SequenceTooShort, "collapse needs length at least 4"};

    auto entries = seq.entries();
    const Parity merged = entries[(j + n - 1) % n] + entries[(j + 1) % n];
    vector<Parity> out;
    out.reserve(n - 2);
    if (j == 0) {
        out.insert(out.end(), entries.begin() + 2, entries.end() - 1);
        out.push_back(merged);
    }
    else if (j == n - 1) {
        out.push_back(merged);
        out.insert(out.end(), entries.begin() + 1, entries.end() - 2);
    }
    else {
        out.insert(out.end(), entries.begin(), entries.begin() + static_cast<long>(j) - 1);
        out.push_back(merged);
        out.insert(out.end(), entries.begin() + static_cast<long>(j) + 2, entries.end());
    }
    return ParitySeq{std::move(out)};
}

auto tricolor::is_terminal_accept(const ParitySeq & seq) -> bool
{
    if (seq.size() == 2)
        return seq[0] == Parity::E && seq[1] == Parity::E;
    return seq.count(Parity::E) == 0 && seq.size() % 6 == 0;
}

auto tricolor::canonicalize(const ParitySeq & seq) -> ParitySeq
{
    return seq.rotated(least_rotation_offset(seq.entries()));
}

auto tricolor::cyclic_equal(const ParitySeq & a, const ParitySeq & b) -> bool
{
    return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

namespace
{
    auto exhaustive(const ParitySeq & canonical, std::unordered_map<string, bool> & memo) -> bool
    {
        if (is_terminal_accept(canonical))
            return true;
        if (canonical.size() < 4)
            return false;

        auto key = to_string(canonical);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;

        bool result = false;
        for (size_t j = 0; j < canonical.size() && ! result; ++j)
            if (canonical[j] == Parity::E)
                result = exhaustive(canonicalize(e_collapse(canonical, j)), memo);

        memo.emplace(std::move(key), result);
        return result;
    }
}

auto tricolor::in_t_exhaustive(const ParitySeq & seq) -> bool
{
    // keyed on canonical rotations only, never on reflections
    thread_local std::unordered_map<string, bool> memo;
    if (memo.size() > (1u << 22))
        memo.clear();
    return exhaustive(canonicalize(seq), memo);
}

auto tricolor::in_t_greedy(const ParitySeq & seq) -> bool
{
    ParitySeq current = canonicalize(seq);
    while (current.size() > 2) {
        auto entries = current.entries();
        auto first_even = std::find(entries.begin(), entries.end(), Parity::E);
        if (first_even == entries.end())
            break;
        current = canonicalize(e_collapse(current, static_cast<size_t>(first_even - entries.begin())));
    }
    return is_terminal_accept(current);
}

auto tricolor::is_symmetric(const ParitySeq & seq) -> bool
{
    const size_t n = seq.size();
    // reflection i -> (axis - i) mod n, for every axis
    for (size_t axis = 0; axis < n; ++axis) {
        bool fixed = true;
        for (size_t i = 0; i < n && fixed; ++i)
            fixed = seq[i] == seq[(axis + n - i) % n];
        if (fixed)
            return true;
    }
    return false;
}
