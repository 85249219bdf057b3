"""Brushed Copper 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.282,
    "detail": 4,
    "roughness": 0.369,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Brushed Copper 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
