use std::fmt;

use cga_core::Generator;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// Geometric product.
    Mul,
    /// Outer product.
    Outer,
    /// Left contraction.
    Contract,
    /// Division by a scalar.
    Div,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Outer => "^",
            BinOp::Contract => "|",
            BinOp::Div => "/",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(String),
    Ident(String),
    Basis(Vec<Generator>),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
    Assign(String, Box<Expr>),
}

impl Expr {
    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }
}

/// Fully parenthesized form, used in warnings.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(n) => f.write_str(n),
            Expr::Ident(s) => f.write_str(s),
            Expr::Basis(g) => {
                let labels: Vec<&str> = g.iter().map(|g| if *g == Generator::Inf { "inf" } else { g.label() }).collect();
                write!(f, "e[{}]", labels.join(","))
            }
            Expr::Neg(e) => write!(f, "-{e}"),
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::Assign(name, e) => write!(f, "{name} = {e}"),
        }
    }
}

/// One parsed line.
#[derive(Clone, Debug, PartialEq)]
pub struct Statement {
    pub expr: Expr,
    /// A trailing `;` suppresses the output line.
    pub silent: bool,
    pub warnings: Vec<String>,
}
