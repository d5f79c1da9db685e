use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use ribbon_core::diagram::write_svg;
use ribbon_core::symunion::{
    find_presentation, from_json, present_family1, present_lisca, to_json, verify_presentation,
    FamilyTag,
};
use ribbon_core::twobridge::{
    enumerate_ribbon, lisca_ribbon_witnesses, parse_knot, Knot as Parsed,
};
use ribbon_core::{Cf, Error, Presentation, Rational, Result, Sign, Witness};
use serde_json::{json, Number, Value};

use crate::{CfCommand, Command, ListCommand, PresentArgs, SymunCommand};

fn num(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer is a JSON number"))
}

fn int(text: &str, what: &str) -> Result<BigInt> {
    let t = text.trim();
    t.strip_prefix('+')
        .unwrap_or(t)
        .parse()
        .map_err(|_| Error::Parse(format!("{what}: expected an integer, got {text:?}")))
}

fn cf_json(cf: &Cf) -> Value {
    Value::Array(cf.entries().iter().map(num).collect())
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "family": w.family.to_string(),
        "m": num(&w.m),
        "aux": num(&w.aux),
        "sign": w.sign.to_i64(),
        "q": num(&w.representative_q),
    })
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("value serialises")
    );
}

pub fn run(command: Command, json: bool) -> Result<u8> {
    match command {
        Command::Cf(CfCommand::Eval { cf }) => {
            let cf: Cf = cf.parse()?;
            let value = cf.eval();
            if json {
                print_json(&json!({
                    "cf": cf_json(&cf),
                    "num": num(value.numer()),
                    "den": num(value.denom()),
                    "infinite": value.is_infinite(),
                }));
            } else {
                println!("{value}");
            }
            Ok(0)
        }
        Command::Cf(CfCommand::Expand { value }) => {
            let r: Rational = value.parse()?;
            let cf = Cf::expand(&r)?;
            if json {
                print_json(
                    &json!({ "cf": cf_json(&cf), "num": num(r.numer()), "den": num(r.denom()) }),
                );
            } else {
                println!("{cf}");
            }
            Ok(0)
        }
        Command::Classify { knot } => classify(&knot, json),
        Command::Symun(SymunCommand::Present(args)) => {
            let pres = present(&args)?;
            println!("{}", to_json(&pres));
            Ok(0)
        }
        Command::Symun(SymunCommand::Verify { document }) => verify(&document, json),
        Command::List(ListCommand::Ribbon { pmax }) => {
            let listing = enumerate_ribbon(&BigInt::from(pmax));
            if json {
                let items = listing
                    .iter()
                    .map(|(k, ws)| {
                        json!({
                            "p": num(k.p()),
                            "q": num(k.q()),
                            "witnesses": ws.iter().map(witness_json).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                print_json(&Value::Array(items));
            } else {
                for (k, _) in &listing {
                    println!("{k}");
                }
            }
            Ok(0)
        }
        Command::Render { document, output } => {
            let pres = read_document(&document)?;
            write_svg(&pres, &output)
                .map_err(|e| Error::Domain(format!("cannot write {}: {e}", output.display())))?;
            Ok(0)
        }
    }
}

fn classify(text: &str, json: bool) -> Result<u8> {
    let knot = match parse_knot::<BigInt>(text)? {
        Parsed::Unknot => {
            if json {
                print_json(&json!({ "knot": "unknot", "ribbon": true, "witnesses": [] }));
            } else {
                println!("unknot: ribbon (trivial)");
            }
            return Ok(0);
        }
        Parsed::TwoBridge(k) => k,
    };
    let witnesses = lisca_ribbon_witnesses(&knot, true);
    let ribbon = !witnesses.is_empty();
    if json {
        print_json(&json!({
            "knot": knot.to_string(),
            "p": num(knot.p()),
            "q": num(knot.q()),
            "ribbon": ribbon,
            "witnesses": witnesses.iter().map(witness_json).collect::<Vec<_>>(),
        }));
    } else if ribbon {
        println!("{knot}: ribbon");
        for w in &witnesses {
            println!("  {w}");
        }
    } else {
        println!("{knot}: not ribbon");
    }
    Ok(0)
}

fn present(args: &PresentArgs) -> Result<Presentation> {
    if let Some(knot) = &args.knot {
        return match parse_knot::<BigInt>(knot)? {
            Parsed::Unknot => Err(Error::NotRibbon("the unknot".into())),
            Parsed::TwoBridge(k) => find_presentation(&k),
        };
    }
    let family = args
        .family
        .as_deref()
        .ok_or_else(|| Error::Parse("give a knot K(p,q) or --family".into()))?;
    let tag: FamilyTag = family.parse()?;
    let need = |v: &Option<String>, flag: &str| {
        v.as_deref()
            .ok_or_else(|| Error::Parse(format!("--family {family} needs --{flag}")))
            .and_then(|s| int(s, flag))
    };
    match tag {
        FamilyTag::F1 => {
            let sign = Sign::try_from(
                i64::try_from(need(&args.sign, "sign")?)
                    .map_err(|_| Error::Domain("sign must be ±1".into()))?,
            )?;
            present_family1(&need(&args.m, "m")?, &need(&args.k, "k")?, sign)
        }
        tag => present_lisca(tag, &need(&args.s, "s")?, &need(&args.t, "t")?),
    }
}

fn read_document(path: &Path) -> Result<Presentation> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    from_json(&text)
}

fn verify(path: &Path, json: bool) -> Result<u8> {
    let pres = read_document(path)?;
    let report = verify_presentation(&pres);
    if json {
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        print_json(&json!({ "passed": report.passed(), "checks": checks }));
    } else {
        print!("{report}");
    }
    Ok(if report.passed() { 0 } else { 4 })
}
