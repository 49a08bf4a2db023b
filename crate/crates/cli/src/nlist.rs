use std::str::FromStr;

/// A list of orders: comma-separated values and inclusive `a..b` ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NList(pub Vec<usize>);

impl FromStr for NList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            let num = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("'{x}' is not a nonnegative integer"))
            };
            match part.split_once("..") {
                Some((a, b)) => {
                    let (a, b) = (num(a)?, num(b)?);
                    if a > b {
                        return Err(format!("empty range {part}"));
                    }
                    out.extend(a..=b);
                }
                None => out.push(num(part)?),
            }
        }
        Ok(NList(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_ranges() {
        assert_eq!("256,1024,4096".parse(), Ok(NList(vec![256, 1024, 4096])));
        assert_eq!("0..3".parse(), Ok(NList(vec![0, 1, 2, 3])));
        assert_eq!("1, 4..5,9".parse(), Ok(NList(vec![1, 4, 5, 9])));
        assert!("5..2".parse::<NList>().is_err());
        assert!("x".parse::<NList>().is_err());
        assert!("".parse::<NList>().is_err());
        assert!("-1".parse::<NList>().is_err());
    }
}
