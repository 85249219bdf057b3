"""Worn Leather 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.66,
    "detail": 3,
    "roughness": 0.438,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
