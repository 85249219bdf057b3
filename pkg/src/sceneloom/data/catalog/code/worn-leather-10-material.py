"""Worn Leather 10 Material generator (Materials)."""

PARAMS = {
    "size": 3.768,
    "detail": 4,
    "roughness": 0.517,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
