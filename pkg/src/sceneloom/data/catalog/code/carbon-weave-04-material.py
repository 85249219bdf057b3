"""Carbon Weave 04 Material generator (Materials)."""

PARAMS = {
    "size": 3.77,
    "detail": 4,
    "roughness": 0.381,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
