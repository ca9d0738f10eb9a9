#ifndef DGB_ERROR_HPP
#define DGB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgb
{

// Mismatched ranks, signatures or orderings between operands.
class structural_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Operation applied outside its mathematical domain (division by a
// non-divisor, zero polynomial where a leading term is needed, ...).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string &msg, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), m_line(line),
          m_column(column)
    {
    }

    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_column;
    }

private:
    std::size_t m_line;
    std::size_t m_column;
};

} // namespace dgb

#endif
