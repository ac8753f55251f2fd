//! Parser for the weight micro-grammar
//!
//! ```text
//! spec   := term (('+' | '-') term)*        whitespace is ignored
//! term   := [sign] [integer '*'] symbol
//! symbol := Lambda0 | Lambda1 | omega1 | delta
//! ```
//!
//! `Lambda1` abbreviates `Lambda0 + omega1`. Symbols may repeat; their
//! coefficients add. The `Display` form of a weight parses back to itself.

use demazure_mult_core::Weight;

use crate::CliError;

fn symbol_weight(symbol: &str) -> Option<Weight> {
    match symbol {
        "Lambda0" => Some(Weight::LAMBDA0),
        "Lambda1" => Some(Weight::LAMBDA1),
        "omega1" => Some(Weight::OMEGA1),
        "delta" => Some(Weight::DELTA),
        _ => None,
    }
}

pub fn parse_weight(input: &str) -> Result<Weight, CliError> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |why: &str| CliError::Usage(format!("cannot parse weight {input:?}: {why}"));
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut total = Weight::ZERO;
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let (negative, after_sign) = match rest.as_bytes()[0] {
            b'+' => (false, &rest[1..]),
            b'-' => (true, &rest[1..]),
            _ if first => (false, rest),
            _ => return Err(bad("expected '+' or '-' between terms")),
        };
        first = false;
        let end = after_sign.find(['+', '-']).unwrap_or(after_sign.len());
        let (term, tail) = after_sign.split_at(end);
        let (coefficient, symbol) = match term.split_once('*') {
            Some((digits, symbol)) => {
                let c: i64 = digits
                    .parse()
                    .map_err(|_| bad(&format!("bad coefficient {digits:?}")))?;
                (c, symbol)
            }
            None => (1, term),
        };
        let unit =
            symbol_weight(symbol).ok_or_else(|| bad(&format!("unknown symbol {symbol:?}")))?;
        let coefficient = if negative { -coefficient } else { coefficient };
        total = total + unit * coefficient;
        rest = tail;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_and_grammar() {
        assert_eq!(parse_weight("Lambda0").unwrap(), Weight::LAMBDA0);
        assert_eq!(parse_weight("Lambda1").unwrap(), Weight::LAMBDA1);
        assert_eq!(
            parse_weight(" 2 * Lambda0 - omega1 ").unwrap(),
            Weight::new(2, -1, 0)
        );
        assert_eq!(
            parse_weight("-3*delta+Lambda1").unwrap(),
            Weight::new(1, 1, -3)
        );
        assert_eq!(
            parse_weight("Lambda0+Lambda1-2*delta").unwrap(),
            Weight::new(2, 1, -2)
        );
    }

    #[test]
    fn display_round_trips() {
        for w in [
            Weight::new(2, -1, 3),
            Weight::new(0, 0, 0),
            Weight::new(-1, 4, -7),
        ] {
            assert_eq!(parse_weight(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "",
            "garbage",
            "2*",
            "3",
            "Lambda0 Lambda1",
            "x*delta",
            "2**delta",
            "+-delta",
        ] {
            assert!(matches!(parse_weight(s), Err(CliError::Usage(_))), "{s:?}");
        }
    }
}
