use std::io::{self, Write};

use serde::Serialize;

use crate::Format;

#[derive(Serialize)]
struct Row<'a> {
    n: u64,
    value: &'a str,
}

/// Writes `(index, value)` pairs. Values are already exact strings.
pub fn write_rows(out: &mut impl Write, rows: &[(u64, String)], format: Format) -> io::Result<()> {
    match format {
        Format::Bfile => {
            for (n, v) in rows {
                writeln!(out, "{n} {v}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in rows {
                writeln!(out, "{n},{v}")?;
            }
        }
        Format::Json => {
            let rows: Vec<Row> = rows.iter().map(|(n, v)| Row { n: *n, value: v }).collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(format: Format) -> String {
        let rows = vec![(1, "3/4".to_string()), (2, "1/24".to_string())];
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows, format).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn bfile_has_no_trailing_space() {
        assert_eq!(render(Format::Bfile), "1 3/4\n2 1/24\n");
    }

    #[test]
    fn csv_header() {
        assert_eq!(render(Format::Csv), "n,value\n1,3/4\n2,1/24\n");
    }

    #[test]
    fn json_values_are_strings() {
        let v: serde_json::Value = serde_json::from_str(&render(Format::Json)).unwrap();
        assert_eq!(v[1]["value"], "1/24");
        assert_eq!(v[0]["n"], 1);
    }
}
