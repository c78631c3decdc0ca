//! Graph and certificate text formats: write, re-read, re-verify, tamper.

use dmagic::constructors::construct_case1;
use dmagic::graph::UndirectedGraph;
use dmagic::verify::{CertificateRecord, Labeling, verify};

fn main() {
    let cert = construct_case1(2, 2).unwrap();
    let graph_text = cert.graph().to_text();
    let cert_text = cert.to_text();
    println!("{graph_text}");
    println!("{cert_text}");

    let graph = UndirectedGraph::parse(&graph_text).unwrap();
    let record = CertificateRecord::parse(&cert_text).unwrap();
    let again = record.check(&graph).expect("round trip verifies");
    assert_eq!(again.to_text(), cert_text);
    println!("re-read: mu = {}", again.mu());

    // moving label 1 into the other part breaks the constant weight
    let swapped = Labeling::new(vec![1, 0, 2, 3]).unwrap();
    match verify(&graph, cert.orientation(), &swapped) {
        Ok(c) => println!("still magic, mu = {}", c.mu()),
        Err(e) => println!("tampered: {e}"),
    }

    let broken = cert_text.replace("mu 2", "mu 3");
    match CertificateRecord::parse(&broken).unwrap().check(&graph) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("wrong mu: {e}"),
    }
    match UndirectedGraph::parse("graph 3 2\ne 0 1\ne 1 5\n") {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("bad graph file: {e}"),
    }
}
