use std::fmt;

use super::Term;

// Binding strength of the printed form; higher binds tighter.
const SUM: u8 = 1;
const PROD: u8 = 2;
const UNARY: u8 = 3;
const POSTFIX: u8 = 4;
const ATOM: u8 = 5;

fn level(t: &Term) -> u8 {
    match t {
        Term::Add(..) => SUM,
        Term::Mul(..) => PROD,
        Term::Neg(_) => UNARY,
        Term::Inv(_) => POSTFIX,
        Term::Zero | Term::One | Term::Var(_) => ATOM,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, t: &Term, min: u8) -> fmt::Result {
    if level(t) < min {
        f.write_str("(")?;
        write_at(f, t, SUM)?;
        return f.write_str(")");
    }
    match t {
        Term::Zero => f.write_str("0"),
        Term::One => f.write_str("1"),
        Term::Var(v) => f.write_str(v),
        Term::Add(l, r) => {
            write_at(f, l, SUM)?;
            match r.as_ref() {
                Term::Neg(inner) => {
                    f.write_str(" - ")?;
                    write_at(f, inner, PROD)
                }
                _ => {
                    f.write_str(" + ")?;
                    write_at(f, r, PROD)
                }
            }
        }
        Term::Mul(l, r) => {
            write_at(f, l, PROD)?;
            f.write_str("*")?;
            write_at(f, r, UNARY)
        }
        Term::Neg(inner) => {
            f.write_str("-")?;
            write_at(f, inner, UNARY)
        }
        Term::Inv(inner) => {
            write_at(f, inner, POSTFIX)?;
            f.write_str("^-1")
        }
    }
}

pub(super) fn write_term(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    write_at(f, t, SUM)
}
