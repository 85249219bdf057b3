"""Carbon Weave Material generator (Materials)."""

PARAMS = {
    "size": 0.866,
    "detail": 2,
    "roughness": 0.718,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave Material"
    for key, value in params.items():
        node[key] = value
    return node
