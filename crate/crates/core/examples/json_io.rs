//! Reading and writing factor sets and algebra elements as JSON.

use std::sync::Arc;

use parsigma::io::{self, FactorSetFile, TermFile};
use parsigma::{FiniteGroup, GroupDescriptor};

fn main() -> parsigma::Result<()> {
    let desc: GroupDescriptor = "builtin:cyclic:2".parse()?;
    let g = Arc::new(FiniteGroup::build(&desc)?);
    let text = r#"{"field":{"kind":"prime","p":7},"n":2,"entries":[[1,1],[1,"3/2"]]}"#;
    let sigma = io::from_json::<FactorSetFile>(text)?.into_factor_set(Some(g.clone()))?;
    println!("σ(a,a) = {}", sigma.get(1, 1));
    println!("{}", io::to_json(&FactorSetFile::from_factor_set(&sigma, false)));

    let terms: Vec<TermFile> = io::from_json(r#"[{"U":[0,1],"g":1,"coeff":"1/2"}]"#)?;
    let x = io::element_from_terms(&terms, &g, sigma.field())?;
    println!("{}", io::to_json(&io::element_to_terms(&x)));

    match io::from_json::<FactorSetFile>("{\"field\": }") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
