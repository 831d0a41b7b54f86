//! Worked sessions, statement by statement. Each input is compared with the
//! expected value written in the calculator grammar, by exact (expanded) equality.

use cga_cli::{parse_statement, EvalError, Runner, Value};
use cga_core::Backend;

fn exec(r: &mut Runner, src: &str) -> Value {
    let st = parse_statement(src).unwrap_or_else(|e| panic!("{src}: {e}"));
    r.session.execute(&st).unwrap_or_else(|e| panic!("{src}: {e}")).value
}

fn check(r: &mut Runner, input: &str, expected: &str) {
    let got = exec(r, input);
    let want = exec(r, expected);
    assert_eq!(got, want, "\n  input:    {input}\n  got:      {got}\n  expected: {want}");
}

fn symbolic() -> Runner {
    Runner::new(Backend::Symbolic)
}

fn define_points(r: &mut Runner, n: usize) {
    let names = [("x", "y", "z"), ("x1", "y1", "z1"), ("x2", "y2", "z2"), ("x3", "y3", "z3"), ("x4", "y4", "z4")];
    let vars = ["p", "p1", "p2", "p3", "p4"];
    for i in 0..n {
        let (x, y, z) = names[i];
        exec(r, &format!("V{i} = {x}*e[1] + {y}*e[2] + {z}*e[3]"));
        exec(r, &format!("{} = e[0] + V{i} + mag2(V{i})/2*e[inf]", vars[i]));
    }
}

#[test]
fn basis_products() {
    let mut r = symbolic();
    check(&mut r, "e[2,1]", "-e[1,2]");
    check(&mut r, "e[inf,0]", "-2 - e[0,inf]");
    check(&mut r, "e[inf,inf]", "0");
    check(&mut r, "e[0,0]", "0");
    check(&mut r, "e[1,inf,2,0]", "2*e[1,2] + e[0,1,2,inf]");
    check(
        &mut r,
        "gp(e[1,2,3] + a*e[inf,3,2], a*e[2], 3, 4 + e[1,3])",
        "3*a - 12*a*e[1,3] + 3*a*a*e[1,inf] - 12*a*a*e[3,inf]",
    );
}

#[test]
fn points_are_null() {
    let mut r = symbolic();
    exec(&mut r, "X = x1*e[1] + x2*e[2] + x3*e[3]");
    exec(&mut r, "x = e[0] + X + gp(X,X)/2*e[inf]");
    check(&mut r, "gp(x, x)", "0");
}

#[test]
fn line_through_two_points() {
    let mut r = symbolic();
    define_points(&mut r, 3);
    check(
        &mut r,
        "line = op(p, p1, p2, e[inf])",
        "(x2*y+x*y1-x2*y1-x*y2+x1*(-y+y2))*op(e[0],e[1],e[2],e[inf]) \
         + (-x1*z+x2*z+x*z1-x2*z1-x*z2+x1*z2)*op(e[0],e[1],e[3],e[inf]) \
         + (-y1*z+y2*z+y*z1-y2*z1-y*z2+y1*z2)*op(e[0],e[2],e[3],e[inf]) \
         + (-x2*y1*z+x1*y2*z+x2*y*z1-x*y2*z1-x1*y*z2+x*y1*z2)*e[1,2,3,inf]",
    );
    // the solved parametric form satisfies every coefficient
    check(&mut r, "op(point(x1 + t*(x2 - x1), y1 + t*(y2 - y1), z1 + t*(z2 - z1)), p1, p2, e[inf])", "0");
    check(&mut r, "coeff(line, e[0,1,2,inf])", "x2*y+x*y1-x2*y1-x*y2+x1*(-y+y2)");
}

#[test]
fn plane_through_three_points() {
    let mut r = symbolic();
    define_points(&mut r, 4);
    let c = "(-x1*y2*z+x1*y3*z+x*y2*z1-x*y3*z1+x1*y*z2-x*y1*z2+x*y3*z2-x1*y3*z2\
             +x3*(-y1*z+y2*z+y*z1-y2*z1-y*z2+y1*z2)+(-x1*y+x*y1-x*y2+x1*y2)*z3\
             +x2*(-y3*z-y*z1+y3*z1+y1*(z-z3)+y*z3))";
    check(&mut r, "plane = op(p, p1, p2, p3, e[inf])", &format!("{c}*op(e[0],e[1],e[2],e[3],e[inf])"));
    // the coefficient of e0 e1 e2 e3 einf is the plane equation
    check(
        &mut r,
        "coeff(plane, e[0,1,2,3,inf])",
        "((z3 - z2)*y1 + (z1 - z3)*y2 + (z2 - z1)*y3)*x + ((z2 - z3)*x1 + (z3 - z1)*x2 + (z1 - z2)*x3)*y \
         + ((y3 - y2)*x1 + (y1 - y3)*x2 + (y2 - y1)*x3)*z + (x2*y3 - x3*y2)*z1 + (x3*y1 - x1*y3)*z2 + (x1*y2 - x2*y1)*z3",
    );
}

#[test]
fn sphere_through_four_points() {
    let mut r = symbolic();
    define_points(&mut r, 5);
    exec(&mut r, "sphere = op(p, p1, p2, p3, p4)");
    let implicit = "12*(-4+(-5+x)*x+y*(5+y)+z+z*z)";
    check(
        &mut r,
        "sphere = subst(sphere, x1=1, y1=-1, z1=3, x2=4, y2=1, z2=-2, x3=-1, y3=-1, z3=1, x4=1, y4=1, z4=1)",
        &format!("{implicit}*op(e[0],e[1],e[2],e[3],e[inf])"),
    );
    check(&mut r, "sphere = coeff(sphere, e[0,1,2,3,inf])", implicit);
    check(&mut r, "sphere", "-48 - 60*x + 12*x*x + 60*y + 12*y*y + 12*z + 12*z*z");
}

#[test]
fn dual_plane() {
    let mut r = symbolic();
    define_points(&mut r, 4);
    check(
        &mut r,
        "P = op(p1, p2, p3, e[inf])",
        "(-x2*y1+x3*y1+x1*y2-x3*y2-x1*y3+x2*y3)*op(e[0],e[1],e[2],e[inf]) \
         + (-x2*z1+x3*z1+x1*z2-x3*z2-x1*z3+x2*z3)*op(e[0],e[1],e[3],e[inf]) \
         + (-y2*z1+y3*z1+y1*z2-y3*z2-y1*z3+y2*z3)*op(e[0],e[2],e[3],e[inf]) \
         + (-x3*y2*z1+x2*y3*z1+x3*y1*z2-x1*y3*z2-x2*y1*z3+x1*y2*z3)*e[1,2,3,inf]",
    );
    check(&mut r, "eq(I5, op(e[0],e[1],e[2],e[3],e[inf]))", "eq(1, 1)");
    check(
        &mut r,
        "Pdual = -lc(P, I5)",
        "(y2*z1-y3*z1-y1*z2+y3*z2+y1*z3-y2*z3)*e[1] + (-x2*z1+x3*z1+x1*z2-x3*z2-x1*z3+x2*z3)*e[2] \
         + (x2*y1-x3*y1-x1*y2+x3*y2+x1*y3-x2*y3)*e[3] + (x3*y2*z1-x2*y3*z1-x3*y1*z2+x1*y3*z2+x2*y1*z3-x1*y2*z3)*e[inf]",
    );
    check(&mut r, "dual(P)", "Pdual");
    // n and h as polynomials in the three points
    exec(&mut r, "n1 = (z3 - z2)*y1 + (z1 - z3)*y2 + (z2 - z1)*y3");
    exec(&mut r, "n2 = (z2 - z3)*x1 + (z3 - z1)*x2 + (z1 - z2)*x3");
    exec(&mut r, "n3 = (y3 - y2)*x1 + (y1 - y3)*x2 + (y2 - y1)*x3");
    exec(&mut r, "h = (x3*y2 - x2*y3)*z1 + (x1*y3 - x3*y1)*z2 + (x2*y1 - x1*y2)*z3");
    check(&mut r, "lc(p, Pdual)", "-h + n1*x + n2*y + n3*z");
    // the einf coefficient of the dual is +h: e0|einf = -1
    check(&mut r, "Pdual", "n1*e[1] + n2*e[2] + n3*e[3] + h*e[inf]");
    check(&mut r, "planedual(n1, n2, n3, -h)", "Pdual");
}

#[test]
fn plane_dual_with_free_coefficients() {
    let mut r = symbolic();
    define_points(&mut r, 1);
    exec(&mut r, "pdual = n1*e[1] + n2*e[2] + n3*e[3] - h*e[inf]");
    check(&mut r, "lc(p, pdual)", "h + n1*x + n2*y + n3*z");
    check(&mut r, "lc(p, planedual(n1, n2, n3, -h))", "-h + n1*x + n2*y + n3*z");
}

#[test]
fn dual_sphere() {
    let mut r = symbolic();
    define_points(&mut r, 2);
    exec(&mut r, "S = p1 - r*r/2*e[inf]");
    check(&mut r, "lc(p, S)", "1/2*(r*r - (x-x1)*(x-x1) - (y-y1)*(y-y1) - (z-z1)*(z-z1))");
    check(&mut r, "spheredual(p1, r)", "S");
}

#[test]
fn translator() {
    let mut r = symbolic();
    exec(&mut r, "t = t1*e[1] + t2*e[2] + t3*e[3]");
    check(&mut r, "Tt = 1 - gp(t, e[inf])/2", "1 - 1/2*t1*e[1,inf] - 1/2*t2*e[2,inf] - 1/2*t3*e[3,inf]");
    check(&mut r, "Tti = inv(Tt)", "1 + 1/2*t1*e[1,inf] + 1/2*t2*e[2,inf] + 1/2*t3*e[3,inf]");
    check(&mut r, "eq(Tti, 1 - 1/2*gp(-t, e[inf]))", "eq(0, 0)");
    check(&mut r, "gp(Tt, e[0], Tti)", "e[0] + t1*e[1] + t2*e[2] + t3*e[3] + 1/2*(t1*t1 + t2*t2 + t3*t3)*e[inf]");
    check(&mut r, "gp(Tt, e[inf], Tti)", "e[inf]");
    exec(&mut r, "x = x1*e[1] + x2*e[2] + x3*e[3]");
    check(&mut r, "gp(Tt, x, Tti)", "x1*e[1] + x2*e[2] + x3*e[3] + (t1*x1 + t2*x2 + t3*x3)*e[inf]");
    check(&mut r, "translator(t1, t2, t3)", "Tt");
}

#[test]
fn rotor_fixes_origin_and_infinity() {
    let mut r = symbolic();
    exec(&mut r, "a = a1*e[1] + a2*e[2] + a3*e[3]");
    exec(&mut r, "b = b1*e[1] + b2*e[2] + b3*e[3]");
    exec(&mut r, "R = gp(a, b)");
    check(&mut r, "rotate(e[0], a, b)", "e[0]");
    check(&mut r, "rotate(e[inf], a, b)", "e[inf]");
    check(&mut r, "rotor(a, b)", "R");
    // the symbolic inverse of R is not polynomial
    let st = parse_statement("gp(R, e[0], inv(R))").unwrap();
    assert!(matches!(r.session.execute(&st), Err(EvalError::Core(_))));
    // with numeric vectors the literal sandwich works
    let mut q = Runner::new(Backend::Exact);
    exec(&mut q, "R = gp(e[1] + 2*e[2] - e[3], 3*e[1] + e[3])");
    check(&mut q, "gp(R, e[0], inv(R))", "e[0]");
    check(&mut q, "gp(R, e[inf], inv(R))", "e[inf]");
}

#[test]
fn inversion() {
    let mut r = symbolic();
    check(&mut r, "inversor(e[0], e[0], r)", "r*r*e[inf]/2");
    exec(&mut r, "v = v1*e[1] + v2*e[2] + v3*e[3]");
    check(&mut r, "inversor(v, e[0], r)", "v");
    // einf goes to 2 e0 / r^2, checked at numeric radii
    let mut q = Runner::new(Backend::Exact);
    for radius in ["2", "3", "1/5"] {
        check(&mut q, &format!("inversor(e[inf], e[0], {radius})"), &format!("2*e[0]/({radius}*{radius})"));
        check(&mut q, &format!("inversor(e[0], e[0], {radius})"), &format!("{radius}*{radius}*e[inf]/2"));
    }
    // the literal definition agrees
    check(
        &mut q,
        "-gp(e[0] - 9*e[inf]/2, e[inf], inv(e[0] - 9*e[inf]/2))",
        "inversor(e[inf], e[0], 3)",
    );
}

#[test]
fn demo_script_runs_and_is_deterministic() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/scripts/sessions.cga")).unwrap();
    let run = || {
        let mut r = Runner::new(Backend::Exact);
        let mut log = Vec::new();
        r.feed_script(&text, &mut log).expect("script runs without errors");
        log.iter().map(|e| format!("{e}\n")).collect::<String>()
    };
    let first = run();
    assert_eq!(first, run());
    assert!(first.contains("Out[1] = -e[1,2]\n"));
    assert!(first.contains("Out[6] = 3a - 12a e[1,3] + 3a^2 e[1,∞] - 12a^2 e[3,∞]\n"));
    assert!(first.contains("= 12x^2+12y^2+12z^2-60x+60y+12z-48\n"));
    assert!(first.contains("= e[2]\n"));
    assert!(!first.contains("Error"));
}
