fn main() {
    let d = bzsv::rootdata::build_root_datum("S(GSO(4) x GSp(4))").unwrap();
    println!("{:?}", d.type_multiset());
}
