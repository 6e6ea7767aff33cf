use plethysm::domino::symmetric_square_split;
use plethysm::engine::Engine;
use plethysm::oracle::{Oracle, OracleConfig};
use plethysm::Partition;

fn p(s: &str) -> Partition { Partition::parse(s).unwrap() }

fn main() {
    let e = Engine::default();
    let o = Oracle::new(OracleConfig { max_degree: 16 });
    // engine vs oracle at grades 14-16 with deeper Jacobi-Trudi minors
    for (nu, mu) in [
        ("3,3,2", "2"), ("3,2,1,1", "2"), ("2,2,2,1,1", "2"),
        ("3,2,2", "2"), ("7,1", "2"), ("2,2,1,1,1", "2"),
        ("3,2,1", "2"), ("4,2,1", "2"), ("2,1", "3,2"), ("2,2", "2,2"),
        ("1,1,1,1", "2,2"), ("2,2,2,2", "2"), ("3,3,1,1", "2"), ("5,2,1", "2"),
    ] {
        let (nu, mu) = (p(nu), p(mu));
        let a = e.expand(&nu, &mu).unwrap().terms;
        let b = o.plethysm_expand_powersum(&nu, &mu).unwrap();
        assert_eq!(a, b, "engine vs oracle at {nu} o {mu}");
        println!("engine == oracle at {nu} o {mu} ({} constituents)", a.len());
    }
    // domino split vs engine at grade 16
    for mu in ["3,3,2", "4,2,1,1", "3,2,2,1", "2,2,2,2", "4,4"] {
        let mu = p(mu);
        let (plus, minus) = symmetric_square_split(&mu, 24).unwrap();
        let sym = e.expand(&p("2"), &mu).unwrap();
        let alt = e.expand(&p("1,1"), &mu).unwrap();
        assert_eq!(plus.terms, sym.terms, "even split at {mu}");
        assert_eq!(minus.terms, alt.terms, "odd split at {mu}");
        println!("domino split == engine at {mu} (even {}, odd {})", plus.terms.len(), minus.terms.len());
    }
    println!("ALL CROSS-CHECKS OK");
}
